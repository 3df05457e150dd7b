#pragma once

#include <vector>

#include "qbg/permutation.hpp"

namespace qbg {

enum class Step { up, down, flat };

/// P(A,B): step i is up if i in A\B, down if i in B\A, flat otherwise.
struct LatticePath {
  std::vector<Step> steps;
  /// heights[x] is the height after x steps; heights[0] = heights[n] = 0.
  std::vector<int> heights;
  int depth = 0;
};

/// Throws PreconditionError when |A| != |B|.
LatticePath build_path(ValueSet a, ValueSet b, int n);

int depth(ValueSet a, ValueSet b, int n);

/// {r in [n] : A <=_r B}, i.e. x+1 for every x where P(A,B) is lowest.
ValueSet valid_shifts(ValueSet a, ValueSet b, int n);

/// Shifted Gale order: sort both sets by <=_r and compare entrywise.
bool shifted_gale_leq(ValueSet a, ValueSet b, int r, int n);

/// [A,B]_r = {K : A <=_r K <=_r B}, by enumeration of |A|-subsets of [n].
/// Throws PreconditionError unless A <=_r B.
std::vector<ValueSet> shifted_interval(ValueSet a, ValueSet b, int r, int n);

/// Per-column cyclic cut a_1 ... a_{n-1}, each in [n].
class ShiftSequence {
public:
  ShiftSequence() = default;
  explicit ShiftSequence(std::vector<int> entries) : entries_(std::move(entries)) {}

  /// a_k, 1-based k.
  int operator[](int k) const { return entries_[k - 1]; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  std::string to_string() const;

  friend bool operator==(const ShiftSequence&, const ShiftSequence&) = default;

private:
  std::vector<int> entries_;
};

/// Parses "4,4,2". Throws ParseError.
ShiftSequence parse_shift_sequence(std::string_view text, int n);

/// u <=_a v: u[k] <=_{a_k} v[k] for k = 1..n-1.
bool shift_compatible(const Permutation& u, const Permutation& v, const ShiftSequence& a);

/// Smallest valid shift in each column.
ShiftSequence find_shift_sequence(const Permutation& u, const Permutation& v);

/// Every a with u <=_a v (the product of the per-column valid-shift sets).
std::vector<ShiftSequence> all_shift_sequences(const Permutation& u, const Permutation& v);

} // namespace qbg
