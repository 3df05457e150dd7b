#include <doctest.h>

#include "qbg/error.hpp"
#include "qbg/membership.hpp"
#include "qbg/sampler.hpp"
#include "qbg/tilted_order.hpp"

using namespace qbg;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

} // namespace

TEST_CASE("random flags") {
  const auto f = random_flag(5, 12);
  CHECK(determinant(f.matrix()) != 0);
  CHECK(random_flag(5, 12).matrix() == f.matrix());
  CHECK_FALSE(random_flag(5, 13).matrix() == f.matrix());
}

TEST_CASE("top and point strata") {
  const auto id = Permutation::identity(4), top = Permutation::longest(4);
  const auto generic = sample_in_open_stratum(id, top, 4);
  for (const auto& w : all_permutations(4)) CHECK(generic.plucker(w) != 0);

  const auto u = P("3142");
  const auto point = sample_in_open_stratum(u, u, 4);
  for (const auto& w : all_permutations(4)) CHECK((point.plucker(w) != 0) == (w == u));
  // Same subspaces as the permutation matrix of u.
  const auto fixed = fixed_point(u);
  for (std::uint32_t bits = 0; bits < 16; ++bits)
    for (int k = 1; k <= 4; ++k)
      CHECK(point.rank_region(ValueSet(bits), k) == fixed.rank_region(ValueSet(bits), k));
}

TEST_CASE("worked pair round trip") {
  const auto u = P("4321"), v = P("3142");
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = sample_in_open_stratum(u, v, seed);
    REQUIRE(member_T_plucker(u, v, f, true));
    const auto label = stratum(u, v, f);
    REQUIRE(label.x == u);
    REQUIRE(label.y == v);
  }
}

TEST_CASE("every pair of S_3 round trips") {
  const auto g = build_graph(3);
  for (const auto& u : all_permutations(3))
    for (const auto& v : all_permutations(3)) {
      const auto f = sample_in_open_stratum(u, v, 99);
      REQUIRE(member_T_plucker(u, v, f, true));
      const auto label = stratum(u, v, f);
      REQUIRE(interval(label.x, label.y, g).members == interval(u, v, g).members);
    }
}

TEST_CASE("determinism and failures") {
  const auto u = P("25143"), v = P("41352");
  CHECK(sample_in_open_stratum(u, v, 7).matrix() == sample_in_open_stratum(u, v, 7).matrix());
  SamplerOptions none;
  none.restarts = 0;
  try {
    sample_in_open_stratum(u, v, 7, none);
    FAIL("expected a sampling error");
  } catch (const SamplingError& e) {
    CHECK(e.column() >= 1);
  }
  CHECK_THROWS_AS(sample_in_open_stratum(P("123"), P("1234"), 1), PreconditionError);
  CHECK_THROWS_AS(sample_in_open_stratum(Permutation::identity(8), Permutation::longest(8), 1),
                  ResourceError);
}
