#include <doctest.h>

#include <algorithm>
#include <set>

#include "qbg/error.hpp"
#include "qbg/permutation.hpp"

using namespace qbg;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

// Inversions by double loop.
int inversions(const std::vector<int>& w) {
  int count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) count += w[i] > w[j];
  return count;
}

// Walks from a to b one step at a time and collects what it passes.
std::set<int> walk(int a, int b, Openness o, int n) {
  std::set<int> out;
  if (a == b) {
    if (o == Openness::closed) out.insert(a);
    return out;
  }
  for (int x = a;; x = x % n + 1) {
    const bool end_a = x == a, end_b = x == b;
    const bool keep = (!end_a && !end_b) ||
                      (end_a && (o == Openness::closed || o == Openness::half_open_right)) ||
                      (end_b && (o == Openness::closed || o == Openness::half_open_left));
    if (keep) out.insert(x);
    if (end_b) break;
  }
  return out;
}

// Simple reflection s_i applied to a vector of coordinates.
std::vector<int> reflect(std::vector<int> root, int i) {
  std::swap(root[i - 1], root[i]);
  return root;
}

} // namespace

TEST_CASE("parsing") {
  CHECK(P("321").word() == std::vector<int>{3, 2, 1});
  CHECK(P("7,3,6,4,1,5,2").word() == std::vector<int>{7, 3, 6, 4, 1, 5, 2});
  CHECK(P("7,3,6,4,1,5,2") == P("7364152"));
  CHECK(P("10,9,8,7,6,5,4,3,2,1") == Permutation::longest(10));
  CHECK(Permutation::longest(10).to_string() == "10,9,8,7,6,5,4,3,2,1");
  CHECK_THROWS_AS(P("122"), ParseError);
  CHECK_THROWS_AS(P("1,x,3"), ParseError);
  CHECK_THROWS_AS(P(""), ParseError);
  CHECK_THROWS_AS(P("13"), ParseError);
  CHECK_THROWS_AS(Permutation({1, 1}), PreconditionError);
}

TEST_CASE("length against inversion count") {
  CHECK(coxeter_length(P("123")) == 0);
  CHECK(coxeter_length(P("321")) == 3);
  CHECK(coxeter_length(P("3142")) == 3);
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) REQUIRE(coxeter_length(w) == inversions(w.word()));
}

TEST_CASE("group structure") {
  for (const auto& u : all_permutations(4)) {
    CHECK(u * u.inverse() == Permutation::identity(4));
    CHECK(coxeter_length(u.inverse()) == coxeter_length(u));
    for (const auto& v : all_permutations(4))
      for (int i = 1; i <= 4; ++i) REQUIRE((u * v)(i) == u(v(i)));
  }
}

TEST_CASE("transpositions") {
  CHECK(apply_transposition(P("123"), {1, 2}) == P("213"));
  CHECK(apply_transposition(P("321"), {1, 3}) == P("123"));
  CHECK(apply_transposition(P("465123"), {1, 5}) == P("265143"));
  // Right multiplication by t_ij changes length by an odd amount.
  for (const auto& w : all_permutations(5))
    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        const auto x = apply_transposition(w, {i, j});
        REQUIRE((coxeter_length(x) - coxeter_length(w)) % 2 != 0);
        REQUIRE(apply_transposition(x, {i, j}) == w);
      }
}

TEST_CASE("prefix sets") {
  CHECK(prefix_set(P("7364152"), 4) == ValueSet::of({3, 4, 6, 7}));
  CHECK(prefix_set(P("4321"), 2) == ValueSet::of({4, 3}));
  CHECK(prefix_set(P("4321"), 0).empty());
  CHECK(prefix_set(P("4321"), 4) == ValueSet::full(4));
  CHECK(ValueSet::of({1, 3, 4}).to_string() == "1,3,4");
  CHECK(ValueSet().to_string() == "");
}

TEST_CASE("k-subsets") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto subsets = k_subsets(n, k);
      int binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
      REQUIRE(int(subsets.size()) == binom);
      REQUIRE(std::is_sorted(subsets.begin(), subsets.end()));
      for (auto s : subsets) REQUIRE(s.size() == k);
    }
}

TEST_CASE("cyclic intervals") {
  CHECK(cyclic_contains({1, 3, Openness::open, 4}, 2));
  CHECK(cyclic_contains({3, 1, Openness::open, 4}, 4));
  for (int k = 1; k <= 5; ++k) {
    CHECK_FALSE(cyclic_contains({5, 5, Openness::half_open_right, 5}, k));
    CHECK_FALSE(cyclic_contains({5, 5, Openness::half_open_left, 5}, k));
  }
  CHECK(closed_cyclic(3, 0, 4) == ValueSet::of({3, 4}));
  for (int n = 1; n <= 7; ++n)
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        for (auto o : {Openness::open, Openness::closed, Openness::half_open_left,
                       Openness::half_open_right}) {
          const auto expected = walk(a, b, o, n);
          const auto got = CyclicInterval{a, b, o, n}.members().elements();
          REQUIRE(std::set<int>(got.begin(), got.end()) == expected);
        }
}

TEST_CASE("shifted linear order") {
  CHECK(shifted_less(1, 2, 5, 5));
  CHECK(shifted_less(4, 5, 2, 5));
  CHECK(shifted_less(5, 6, 4, 9));
  CHECK_FALSE(shifted_less(5, 4, 4, 9));
  // Oracle: position in the list r, r+1, ..., n, 1, ..., r-1.
  for (int n = 1; n <= 7; ++n)
    for (int r = 1; r <= n; ++r) {
      std::vector<int> order;
      for (int t = 0; t < n; ++t) order.push_back((r - 1 + t) % n + 1);
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
          const auto pa = std::find(order.begin(), order.end(), a) - order.begin();
          const auto pb = std::find(order.begin(), order.end(), b) - order.begin();
          REQUIRE(shifted_less(r, a, b, n) == (pa < pb));
        }
    }
}

TEST_CASE("rotation by the long cycle") {
  CHECK(long_cycle_rotate(P("123")) == P("231"));
  CHECK(long_cycle_rotate(P("321")) == P("132"));
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : all_permutations(n)) {
      auto x = w;
      for (int t = 0; t < n; ++t) x = long_cycle_rotate(x);
      REQUIRE(x == w);
    }
}

TEST_CASE("enumeration and ranking") {
  for (int n = 1; n <= 6; ++n) {
    const auto all = all_permutations(n);
    REQUIRE(std::is_sorted(all.begin(), all.end()));
    for (std::size_t i = 0; i < all.size(); ++i) REQUIRE(lex_rank(all[i]) == i);
  }
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(Permutation::longest(3)).size() == 2);
  CHECK(reduced_words(Permutation::longest(4)).size() == 16);
  CHECK(reduced_words(Permutation::identity(4)).size() == 1);
  for (const auto& w : all_permutations(4))
    for (const auto& word : reduced_words(w)) {
      REQUIRE(int(word.size()) == coxeter_length(w));
      REQUIRE(word_product(word, 4) == w);
    }
}

TEST_CASE("reflection orderings") {
  const std::vector<Root> expected{{3, 4}, {1, 2}, {1, 4}, {2, 4}, {1, 3}, {2, 3}};
  CHECK(reflection_ordering({3, 1, 2, 1, 3, 2}, 4) == expected);
  CHECK(reflection_ordering({1, 2, 1}, 3) == std::vector<Root>{{1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(reflection_ordering({1, 1}, 2), PreconditionError);
  CHECK_THROWS_AS(reflection_ordering({1, 2}, 3), PreconditionError);

  // Oracle: apply s_{a_1} ... s_{a_{k-1}} to the coordinate vector of alpha_{a_k}.
  for (int n = 2; n <= 4; ++n)
    for (const auto& word : reduced_words(Permutation::longest(n))) {
      std::vector<Root> got = reflection_ordering(word, n);
      REQUIRE(is_reflection_ordering(got, n));
      for (std::size_t k = 0; k < word.size(); ++k) {
        std::vector<int> root(n);
        root[word[k] - 1] = 1;
        root[word[k]] = -1;
        for (std::size_t m = k; m-- > 0;) root = reflect(root, word[m]);
        const int i = int(std::find(root.begin(), root.end(), 1) - root.begin()) + 1;
        const int j = int(std::find(root.begin(), root.end(), -1) - root.begin()) + 1;
        REQUIRE(got[k] == Root{i, j});
      }
    }
  CHECK_FALSE(is_reflection_ordering({{1, 3}, {1, 2}, {2, 3}}, 3));
  CHECK_FALSE(is_reflection_ordering({{1, 2}, {2, 3}}, 3));
}
