#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbg/lattice_path.hpp"
#include "qbg/permutation.hpp"

namespace qbg {

/// u <=_a v and u[k-1] <=_{a_k} v[k-1] for k = 2..n-1.
bool is_flat(const Permutation& u, const Permutation& v, const ShiftSequence& a);

/// Smallest a_k in valid_shifts(u[k-1],v[k-1]) ∩ valid_shifts(u[k],v[k]) per column.
/// An empty intersection throws InternalError.
ShiftSequence find_flat(const Permutation& u, const Permutation& v);

enum class DiagramKind { down, up };

/// Box in row i (a value) and column k (a position).
struct Cell {
  int row = 0;
  int column = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct TiltedDiagram {
  DiagramKind kind = DiagramKind::down;
  std::vector<Cell> cells;  ///< sorted by (row, column)

  bool contains(const Cell& c) const;
  /// "{(1,2),(2,2)}"
  std::string to_string() const;
};

/// down: {(i,k) : i <_{a_k} w_k, w^{-1}(i) > k}
/// up:   {(i,k) : i >_{a_k} w_k, w^{-1}(i) > k}
TiltedDiagram tilted_rothe(const Permutation& w, const ShiftSequence& a, DiagramKind kind);

/// ASCII grid: rows are values 1..n top to bottom, columns are positions.
/// 'o' marks (w_k, k), '#' a diagram cell, and a run of '-' sits just above a_k in column k.
std::string render_diagram(const Permutation& w, const ShiftSequence& a, const TiltedDiagram& d);

// --- Plücker equations -------------------------------------------------------

/// P of an index list, rewritten as sign * P_set. sign 0 means an index repeats.
struct SignedSet {
  int sign = 1;
  ValueSet set;
};

/// Sign of the sorting permutation of `indices`.
SignedSet sort_indices(const std::vector<int>& indices);
/// P_{I+i}: i appended after the increasing list of I.
SignedSet append_index(ValueSet base, int i);
/// P_{I-i_j} with the (-1)^{k-j} convention, I = {i_1 < ... < i_k}.
SignedSet remove_index(ValueSet base, int i);

/// coefficient * P_first * P_second (P of the empty set is 1).
struct PluckerTerm {
  int coefficient = 1;
  ValueSet first;
  ValueSet second;
};

enum class EquationRule {
  below_bottom,  ///< cell of the down diagram of u
  above_top,     ///< cell of the up diagram of v
  above_both,    ///< up cell shared by v and x
  moved_entry,   ///< up cell of v in row x_p strictly between p and q
  exchange,      ///< up cell of v in column q, row strictly between x_p and x_q
};

std::string to_string(EquationRule rule);

/// Sum of terms = 0. A single term is a vanishing condition; two are a quadratic relation.
struct PluckerEquation {
  EquationRule rule;
  Cell cell;
  std::vector<PluckerTerm> terms;

  bool quadratic() const { return rule == EquationRule::exchange; }
  std::string to_string() const;
};

struct EquationSet {
  Permutation u;
  Permutation v;
  ShiftSequence a;
  std::optional<Permutation> x;
  std::vector<PluckerEquation> equations;
  /// Up cells of v that fit none of the cases of the x-variant; they get no equation.
  std::vector<Cell> unmatched;

  std::string to_json() const;
};

/// One vanishing condition per cell of the down diagram of u and the up diagram of v.
/// Throws PreconditionError unless u <=_a v.
EquationSet equations(const Permutation& u, const Permutation& v, const ShiftSequence& a);

/// Equations attached to a coatom x = v t_pq of [u,v].
/// Throws PreconditionError (naming the failing condition) unless a is flat for (u,v),
/// x lies in [u,v], and x -> v is an edge.
EquationSet equations_with_x(const Permutation& u, const Permutation& v, const ShiftSequence& a,
                             const Permutation& x);

} // namespace qbg
