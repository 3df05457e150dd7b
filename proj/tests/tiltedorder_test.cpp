#include <doctest.h>

#include <algorithm>
#include <random>

#include "qbg/lattice_path.hpp"
#include "qbg/tilted_order.hpp"

using namespace qbg;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

// Strong Bruhat order: every sorted prefix of x is entrywise below that of y.
bool bruhat_leq(const Permutation& x, const Permutation& y) {
  for (int k = 1; k <= x.size(); ++k) {
    std::vector<int> a(x.word().begin(), x.word().begin() + k);
    std::vector<int> b(y.word().begin(), y.word().begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

int inversions(const Permutation& w) {
  int count = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j) count += w(i) > w(j);
  return count;
}

std::vector<Permutation> sorted(std::vector<Permutation> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("identity base is strong Bruhat order") {
  const auto g3 = build_graph(3);
  CHECK(tilted_leq(P("132"), P("231"), P("321"), g3));
  CHECK(tilted_leq(P("123"), P("213"), P("231"), g3));
  CHECK_FALSE(tilted_leq(P("123"), P("231"), P("312"), g3));
  for (int n = 1; n <= 5; ++n) {
    const auto g = build_graph(n);
    const LengthTable lengths(g);
    const auto id = Permutation::identity(n);
    for (const auto& x : all_permutations(n))
      for (const auto& y : all_permutations(n)) {
        REQUIRE(tilted_leq(id, x, y, lengths) == bruhat_leq(x, y));
        if (n <= 4) REQUIRE(tilted_leq(id, x, y, g) == bruhat_leq(x, y));
      }
  }
  for (const auto& u : all_permutations(4)) CHECK(tilted_leq(u, u, u, build_graph(4)));
}

TEST_CASE("intervals") {
  const auto g3 = build_graph(3);
  const auto top = interval(P("132"), P("321"), g3);
  CHECK(top.members == sorted({P("132"), P("231"), P("312"), P("321")}));
  CHECK(top.rank_of(P("132")) == 0);
  CHECK(top.rank_of(P("231")) == 1);
  CHECK(top.rank_of(P("312")) == 1);
  CHECK(top.rank_of(P("321")) == 2);
  CHECK(top.rank_of(P("123")) == -1);
  CHECK(top.height() == 2);
  CHECK_FALSE(interval_members_criterion(P("132"), P("321"), P("123"), CriterionMode::exists_shift));

  const auto g6 = build_graph(6);
  CHECK(interval(P("263145"), P("465123"), g6).contains(P("265143")));
  CHECK(interval_members_criterion(P("263145"), P("465123"), P("265143"), CriterionMode::all_shifts));
  CHECK(interval_members_criterion(P("263145"), P("465123"), P("265143"), CriterionMode::exists_shift));

  for (int n = 1; n <= 5; ++n) {
    const auto g = build_graph(n);
    int factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    CHECK(int(interval(Permutation::identity(n), Permutation::longest(n), g).members.size()) == factorial);
    for (const auto& u : all_permutations(n)) {
      const auto single = interval(u, u, g);
      REQUIRE(single.members == std::vector<Permutation>{u});
      REQUIRE(single.height() == 0);
    }
  }

  const auto whole = tilted_order(P("132"), g3);
  CHECK(whole.members.size() == 6);
  CHECK_FALSE(whole.top.has_value());
  CHECK(whole.rank_of(P("123")) == 1);
}

TEST_CASE("membership criteria agree with geodesics") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = build_graph(n);
    const LengthTable lengths(g);
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n))
        for (const auto& w : all_permutations(n)) {
          const bool geo = lengths.length(u, w) + lengths.length(w, v) == lengths.length(u, v);
          REQUIRE(tilted_leq(u, w, v, lengths) == geo);
          REQUIRE(interval_members_criterion(u, v, w, CriterionMode::all_shifts) == geo);
          REQUIRE(interval_members_criterion(u, v, w, CriterionMode::exists_shift) == geo);
        }
  }
}

TEST_CASE("subintervals respect every shift sequence") {
  const auto g = build_graph(4);
  std::mt19937_64 rng(5);
  const auto all = all_permutations(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& u = all[rng() % all.size()];
    const auto& v = all[rng() % all.size()];
    const auto uv = interval(u, v, g);
    for (const auto& x : uv.members)
      for (const auto& y : uv.members) {
        if (!tilted_leq(u, x, y, g)) continue;
        for (const auto& a : all_shift_sequences(u, v)) REQUIRE(shift_compatible(x, y, a));
      }
  }
}

TEST_CASE("gradedness") {
  for (int n = 2; n <= 4; ++n) {
    const auto g = build_graph(n);
    for (const auto& u : all_permutations(n))
      for (const auto& v : all_permutations(n)) {
        const auto uv = interval(u, v, g);
        for (std::size_t m = 0; m < uv.members.size(); ++m) {
          if (uv.ranks[m] == uv.height()) continue;
          bool up = false;
          for (const auto& e : g.out_edges(uv.members[m]))
            up = up || uv.rank_of(e.target) == uv.ranks[m] + 1;
          REQUIRE(up);
        }
      }
  }
}

TEST_CASE("intervals do not depend on the base") {
  const auto g = build_graph(4);
  const LengthTable lengths(g);
  const auto all = all_permutations(4);
  for (const auto& w : all)
    for (const auto& v : all) {
      const auto members = interval(w, v, g).members;
      for (const auto& base : all) {
        if (!tilted_leq(base, w, v, lengths)) continue;
        std::vector<Permutation> from_base;
        for (const auto& x : all)
          if (tilted_leq(base, w, x, lengths) && tilted_leq(base, x, v, lengths)) from_base.push_back(x);
        REQUIRE(from_base == members);
      }
    }
}

TEST_CASE("Hasse diagrams") {
  const auto g3 = build_graph(3);
  const auto d132 = tilted_order(P("132"), g3);
  CHECK(hasse_edges(d132).size() == 7);

  const auto top = interval(P("132"), P("321"), g3);
  CHECK(hasse_edges(top).size() == 4);
  const auto json = hasse_export(top, GraphFormat::json);
  CHECK(json.find("\"bottom\": \"132\"") != std::string::npos);
  const auto dot = hasse_export(top, GraphFormat::dot);
  CHECK(dot.find("\"132\" -> \"231\"") != std::string::npos);

  const auto single = interval(P("213"), P("213"), g3);
  CHECK(hasse_edges(single).empty());

  // Over the identity: Bruhat covers, i.e. comparable pairs one inversion apart.
  for (int n = 2; n <= 4; ++n) {
    const auto g = build_graph(n);
    const auto full = interval(Permutation::identity(n), Permutation::longest(n), g);
    std::size_t covers = 0;
    for (const auto& x : full.members)
      for (const auto& y : full.members)
        covers += bruhat_leq(x, y) && inversions(y) == inversions(x) + 1;
    const auto edges = hasse_edges(full);
    REQUIRE(edges.size() == covers);
    for (const auto& e : edges) {
      REQUIRE(bruhat_leq(full.members[e.lower], full.members[e.upper]));
      REQUIRE(e.weight.is_zero());
    }
  }
}
