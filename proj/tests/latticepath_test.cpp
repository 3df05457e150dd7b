#include <doctest.h>

#include <algorithm>

#include "qbg/error.hpp"
#include "qbg/lattice_path.hpp"

using namespace qbg;

namespace {

ValueSet S(std::initializer_list<int> v) { return ValueSet::of(v); }

// Sorts both sets under <=_r and compares entrywise.
bool gale_oracle(ValueSet a, ValueSet b, int r, int n) {
  auto key = [&](int x) { return ((x - r) % n + n) % n; };
  auto ea = a.elements(), eb = b.elements();
  if (ea.size() != eb.size()) return false;
  auto by_key = [&](int x, int y) { return key(x) < key(y); };
  std::sort(ea.begin(), ea.end(), by_key);
  std::sort(eb.begin(), eb.end(), by_key);
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (key(ea[i]) > key(eb[i])) return false;
  return true;
}

// Height walk straight from the definition.
std::vector<int> heights_oracle(ValueSet a, ValueSet b, int n) {
  std::vector<int> h{0};
  for (int i = 1; i <= n; ++i)
    h.push_back(h.back() + (a.contains(i) && !b.contains(i)) - (b.contains(i) && !a.contains(i)));
  return h;
}

} // namespace

TEST_CASE("lattice path of a worked pair") {
  const auto path = build_path(S({3, 4, 6, 7}), S({1, 2, 3, 5}), 7);
  CHECK(path.heights == std::vector<int>{0, -1, -2, -2, -1, -2, -1, 0});
  CHECK(path.depth == 2);
  CHECK(path.steps[0] == Step::down);
  CHECK(path.steps[2] == Step::flat);
  CHECK(path.steps[3] == Step::up);
  CHECK(depth(S({3, 4, 6, 7}), S({1, 2, 3, 5}), 7) == 2);
}

TEST_CASE("depth examples") {
  CHECK(depth(S({7}), S({2}), 7) == 1);
  CHECK(depth(S({2}), S({7}), 7) == 0);
  CHECK(depth(S({1}), S({2}), 2) == 0);
  const auto path = build_path(S({1}), S({2}), 2);
  CHECK(path.steps == std::vector<Step>{Step::up, Step::down});
  const auto flat = build_path(S({2, 4}), S({2, 4}), 5);
  CHECK(std::all_of(flat.steps.begin(), flat.steps.end(), [](Step s) { return s == Step::flat; }));
  CHECK(flat.depth == 0);
  CHECK_THROWS_AS(build_path(S({1}), S({1, 2}), 3), PreconditionError);
}

TEST_CASE("paths against the height oracle") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto a : k_subsets(n, k))
        for (auto b : k_subsets(n, k)) {
          const auto path = build_path(a, b, n);
          const auto h = heights_oracle(a, b, n);
          REQUIRE(path.heights == h);
          REQUIRE(path.depth == -*std::min_element(h.begin(), h.end()));
        }
}

TEST_CASE("shifted Gale order") {
  CHECK(shifted_gale_leq(S({1, 2}), S({3, 4}), 1, 4));
  CHECK(shifted_gale_leq(S({4, 3}), S({3, 1}), 4, 4));
  CHECK_FALSE(shifted_gale_leq(S({4, 3}), S({3, 1}), 1, 4));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto a : k_subsets(n, k))
        for (auto b : k_subsets(n, k))
          for (int r = 1; r <= n; ++r) REQUIRE(shifted_gale_leq(a, b, r, n) == gale_oracle(a, b, r, n));
}

TEST_CASE("valid shifts") {
  CHECK(valid_shifts(S({3, 4, 6, 7}), S({1, 2, 3, 5}), 7) == S({3, 4, 6}));
  CHECK(valid_shifts(S({4, 3}), S({3, 1}), 4) == S({2, 3, 4}));
  CHECK(valid_shifts(S({2, 5}), S({2, 5}), 5) == ValueSet::full(5));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k)
      for (auto a : k_subsets(n, k))
        for (auto b : k_subsets(n, k)) {
          ValueSet expected;
          for (int r = 1; r <= n; ++r)
            if (gale_oracle(a, b, r, n)) expected = expected.with(r);
          const ValueSet got = valid_shifts(a, b, n);
          REQUIRE(got == expected);
          // Some shift always works, and the shifts sit where the path is lowest.
          REQUIRE(!got.empty());
          const auto h = build_path(a, b, n).heights;
          const int low = *std::min_element(h.begin(), h.end());
          for (int r : got.elements()) REQUIRE(h[r - 1] == low);
        }
}

TEST_CASE("both orders only when the sets agree") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (auto a : k_subsets(n, k))
        for (auto b : k_subsets(n, k)) {
          for (int r = 1; r <= n; ++r)
            if (shifted_gale_leq(a, b, r, n) && shifted_gale_leq(b, a, r, n)) REQUIRE(a == b);
          // Reversing the roles flips the path, so the two depths span its full height range.
          const auto h = build_path(a, b, n).heights;
          const auto [low, high] = std::minmax_element(h.begin(), h.end());
          REQUIRE(depth(a, b, n) + depth(b, a, n) == *high - *low);
        }
}

TEST_CASE("shifted intervals") {
  CHECK(shifted_interval(S({1}), S({3}), 1, 3) == std::vector<ValueSet>{S({1}), S({2}), S({3})});
  CHECK(shifted_interval(S({2, 4}), S({2, 4}), 3, 5) == std::vector<ValueSet>{S({2, 4})});
  auto got = shifted_interval(S({4, 3}), S({3, 1}), 4, 4);
  std::sort(got.begin(), got.end());
  std::vector<ValueSet> expected{S({3, 4}), S({1, 3})};
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);
  CHECK_THROWS_AS(shifted_interval(S({4, 3}), S({3, 1}), 1, 4), PreconditionError);
}

TEST_CASE("shift sequences") {
  const auto u = parse_permutation("4321"), v = parse_permutation("3142");
  CHECK(find_shift_sequence(u, v) == ShiftSequence({4, 2, 2}));
  CHECK(all_shift_sequences(u, v).size() == 3);
  CHECK(find_shift_sequence(u, u) == ShiftSequence({1, 1, 1}));
  CHECK(find_shift_sequence(Permutation::identity(5), Permutation::longest(5)) ==
        ShiftSequence({1, 1, 1, 1}));
  CHECK(parse_shift_sequence("4,4,2", 4) == ShiftSequence({4, 4, 2}));
  CHECK(parse_shift_sequence("4,4,2", 4).to_string() == "4,4,2");
  CHECK_THROWS_AS(parse_shift_sequence("4,4", 4), ParseError);
  CHECK_THROWS_AS(parse_shift_sequence("4,5,2", 4), ParseError);
  CHECK_THROWS_AS(parse_shift_sequence("4,x,2", 4), ParseError);
  CHECK(shift_compatible(u, v, ShiftSequence({4, 4, 2})));
  CHECK_FALSE(shift_compatible(u, v, ShiftSequence({1, 4, 2})));

  // Every pair admits some a; all_shift_sequences is exactly the compatible product.
  for (const auto& x : all_permutations(4))
    for (const auto& y : all_permutations(4)) {
      const auto all = all_shift_sequences(x, y);
      REQUIRE(!all.empty());
      REQUIRE(all.front() == find_shift_sequence(x, y));
      int count = 0;
      for (int a1 = 1; a1 <= 4; ++a1)
        for (int a2 = 1; a2 <= 4; ++a2)
          for (int a3 = 1; a3 <= 4; ++a3) count += shift_compatible(x, y, ShiftSequence({a1, a2, a3}));
      REQUIRE(int(all.size()) == count);
      for (const auto& a : all) REQUIRE(shift_compatible(x, y, a));
    }
}
