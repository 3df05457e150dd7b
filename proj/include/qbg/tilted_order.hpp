#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbg/graph.hpp"

namespace qbg {

/// [u,v]: permutations on some shortest u -> v path, with ranks l(u, .).
/// For the whole tilted order D_u the top is absent and every permutation is a member.
struct TiltedInterval {
  Permutation bottom;
  std::optional<Permutation> top;
  std::vector<Permutation> members;  ///< lexicographic order
  std::vector<int> ranks;            ///< ranks[m] = l(bottom, members[m])

  bool contains(const Permutation& w) const;
  /// -1 if w is not a member.
  int rank_of(const Permutation& w) const;
  int height() const;
};

/// w <=_base v: l(base,w) + l(w,v) = l(base,v).
bool tilted_leq(const Permutation& base, const Permutation& w, const Permutation& v,
                const QuantumBruhatGraph& g);
bool tilted_leq(const Permutation& base, const Permutation& w, const Permutation& v,
                const LengthTable& lengths);

enum class CriterionMode { all_shifts, exists_shift };

/// Graph-free test of w in [u,v] through valid shifts of prefix sets.
/// exists_shift: every column k has a shift r with u[k] <=_r w[k] <=_r v[k].
/// all_shifts: every valid shift r of (u[k], v[k]) has u[k] <=_r w[k] <=_r v[k].
bool interval_members_criterion(const Permutation& u, const Permutation& v, const Permutation& w,
                                CriterionMode mode);

TiltedInterval interval(const Permutation& u, const Permutation& v, const QuantumBruhatGraph& g);
/// The whole order D_u (all of S_n ranked by l(u, .)).
TiltedInterval tilted_order(const Permutation& u, const QuantumBruhatGraph& g);

struct HasseEdge {
  std::size_t lower;  ///< index into members
  std::size_t upper;
  Root root;
  QExponent weight;
};

/// Graph edges between members of consecutive rank.
std::vector<HasseEdge> hasse_edges(const TiltedInterval& interval);

std::string hasse_export(const TiltedInterval& interval, GraphFormat format);

} // namespace qbg
