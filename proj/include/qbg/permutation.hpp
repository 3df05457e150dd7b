#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qbg {

/// Subset of [n] = {1..n}, n <= 32, stored as a bitmask (bit v-1 <-> value v).
class ValueSet {
public:
  constexpr ValueSet() = default;
  constexpr explicit ValueSet(std::uint32_t bits) : bits_(bits) {}
  static ValueSet of(std::initializer_list<int> values);
  static ValueSet of(const std::vector<int>& values);
  /// {1..n}
  static constexpr ValueSet full(int n) {
    return ValueSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
  int size() const { return __builtin_popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr ValueSet with(int v) const { return ValueSet(bits_ | (1u << (v - 1))); }
  constexpr ValueSet without(int v) const { return ValueSet(bits_ & ~(1u << (v - 1))); }
  constexpr ValueSet operator|(ValueSet o) const { return ValueSet(bits_ | o.bits_); }
  constexpr ValueSet operator&(ValueSet o) const { return ValueSet(bits_ & o.bits_); }
  constexpr ValueSet minus(ValueSet o) const { return ValueSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(ValueSet o) const { return (bits_ & ~o.bits_) == 0; }

  /// Elements in increasing order.
  std::vector<int> elements() const;
  /// "1,3,4"; the empty set prints as "".
  std::string to_string() const;

  friend constexpr bool operator==(ValueSet, ValueSet) = default;
  friend constexpr auto operator<=>(ValueSet a, ValueSet b) { return a.bits_ <=> b.bits_; }

private:
  std::uint32_t bits_ = 0;
};

/// All k-element subsets of [n], in increasing bitmask order.
std::vector<ValueSet> k_subsets(int n, int k);

/// Positive root e_i - e_j (1 <= i < j), also the label of the edge w -> w t_ij.
struct Root {
  int i = 0;
  int j = 0;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
};

std::string to_string(const Root& t);

/// Permutation of [n] in one-line notation w_1 ... w_n (values 1-based).
///
/// Composition is (uv)(i) = u(v(i)); right multiplication by t_ij swaps the
/// entries in positions i and j.
class Permutation {
public:
  Permutation() = default;
  /// Throws PreconditionError unless `word` is a bijection on [n], n >= 1.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  /// The longest element n n-1 ... 1.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(word_.size()); }
  /// w(i), 1-based position.
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;

  /// Digit string for n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> word_;
};

/// Accepts a digit string (n <= 9) or comma-separated integers.
/// Throws ParseError naming the offending token.
Permutation parse_permutation(std::string_view text);

/// Number of inversions.
int coxeter_length(const Permutation& w);

/// w t_ij: swaps the entries in positions t.i and t.j.
Permutation apply_transposition(const Permutation& w, const Root& t);

/// w[k] = {w_1, ..., w_k}; k = 0 gives the empty set.
ValueSet prefix_set(const Permutation& w, int k);

/// Left multiplication by the long cycle (1 2 ... n): every value v becomes v+1 (n -> 1).
Permutation long_cycle_rotate(const Permutation& w);

/// Every permutation of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// Position of w in lexicographic order of S_n (Lehmer code).
std::size_t lex_rank(const Permutation& w);

// --- cyclic intervals --------------------------------------------------------

enum class Openness { open, closed, half_open_left, half_open_right };

/// Cyclic interval of [n] between a and b, walking a -> a+1 -> ... -> b (mod n).
///
/// `half_open_left` is (a,b]_c and `half_open_right` is [a,b)_c. An endpoint
/// of 0 stands for n, so [j,0]_c = [j,n]. Degenerate endpoints: [j,j]_c = {j},
/// [j,j)_c = (j,j]_c = (j,j)_c = {}.
struct CyclicInterval {
  int a = 1;
  int b = 1;
  Openness openness = Openness::closed;
  int n = 1;

  ValueSet members() const;
};

bool cyclic_contains(const CyclicInterval& interval, int k);

inline ValueSet closed_cyclic(int a, int b, int n) {
  return CyclicInterval{a, b, Openness::closed, n}.members();
}
inline ValueSet open_cyclic(int a, int b, int n) {
  return CyclicInterval{a, b, Openness::open, n}.members();
}

// --- shifted linear order ----------------------------------------------------

/// Position of `a` in r < r+1 < ... < n < 1 < ... < r-1 (0-based).
inline int shifted_rank(int r, int a, int n) { return ((a - r) % n + n) % n; }

/// a <_r b in the shifted linear order; a == b gives false.
bool shifted_less(int r, int a, int b, int n);

// --- reduced words and reflection orderings ----------------------------------

/// s_{a_1} s_{a_2} ... as a permutation.
Permutation word_product(const std::vector<int>& word, int n);

/// All reduced words of w (simple generator indices 1..n-1).
std::vector<std::vector<int>> reduced_words(const Permutation& w);

/// Reflection ordering gamma_k = s_{a_1} ... s_{a_{k-1}} alpha_{a_k} induced by a
/// reduced word of w_0. Throws PreconditionError if the word is not reduced or
/// is not a word for w_0.
std::vector<Root> reflection_ordering(const std::vector<int>& reduced_word, int n);

/// e_i - e_k lies between e_i - e_j and e_j - e_k for every i < j < k, and the
/// sequence lists each positive root exactly once.
bool is_reflection_ordering(const std::vector<Root>& ordering, int n);

} // namespace qbg
