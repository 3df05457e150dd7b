#pragma once

#include "qbg/diagrams.hpp"
#include "qbg/flag.hpp"
#include "qbg/lattice_path.hpp"
#include "qbg/tilted_order.hpp"

namespace qbg {

/// Rank conditions: for i in [n-1] and j in [n],
///   rank(rows [a_i, j]_c, first i columns) vs #(u[i] ∩ [a_i, j]_c)
///   rank(rows [j, a_i - 1]_c, first i columns) vs #(v[i] ∩ [j, a_i - 1]_c)
/// compared with <= (closed) or == (open). Throws PreconditionError unless u <=_a v.
bool member_T_rank(const Permutation& u, const Permutation& v, const ShiftSequence& a,
                   const Flag& f, bool open);

/// Per column k: P_K = 0 for every k-subset K outside [u[k], v[k]]_{a_k}; open also
/// needs P_{u[k]} P_{v[k]} != 0. Throws PreconditionError unless u <=_a v.
bool member_T_grassmann(const Permutation& u, const Permutation& v, const ShiftSequence& a,
                        const Flag& f, bool open);

/// P_w = 0 for every w outside [u,v]; open also needs P_u P_v != 0.
/// Interval membership is decided by the prefix-shift criterion.
bool member_T_plucker(const Permutation& u, const Permutation& v, const Flag& f, bool open);
/// As above with [u,v] supplied (e.g. from the graph).
bool member_T_plucker(const TiltedInterval& uv, const Flag& f, bool open);

struct StratumLabel {
  Permutation x;
  Permutation y;
  Permutation u;
  Permutation v;
  ShiftSequence a;
};

/// The open stratum containing f, read off from rank jumps under a = find_flat(u,v).
/// Throws PreconditionError if f is not in the closed variety for (u,v), and
/// InternalError if the rank-jump sets fail to nest.
StratumLabel stratum(const Permutation& u, const Permutation& v, const Flag& f);

/// Some w with w[|I|] = I and P_w != 0, by greedily extending I downward and upward.
/// Throws PreconditionError if P_I = 0.
Permutation complete_to_permutation(const Flag& f, ValueSet rows);

/// Value of the left-hand side of an equation on f.
mpq_class evaluate(const PluckerEquation& e, const Flag& f);
bool all_vanish(const EquationSet& s, const Flag& f);

} // namespace qbg
