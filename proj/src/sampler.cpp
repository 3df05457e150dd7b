#include "qbg/sampler.hpp"

#include <algorithm>
#include <random>

#include "qbg/diagrams.hpp"
#include "qbg/error.hpp"
#include "qbg/membership.hpp"

namespace qbg {

namespace {

// Multiplies by the lcm of denominators so the column is integral.
void clear_denominators(std::vector<mpq_class>& column) {
  mpz_class l = 1;
  for (const auto& x : column) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (auto& x : column) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mpz_class(x.get_num()).get_mpz_t());
  }
  if (g > 1)
    for (auto& x : column) x /= g;
}

// rank_bounds[k][P]: the largest rank the rows P of columns 1..k may have. Level k
// must lie in the rotated Richardson cell for (u[k], v[k], a_k), whose generic
// matroid is the shifted Gale interval; every lower level inherits the bound.
std::vector<std::vector<int>> rank_bounds(const Permutation& u, const Permutation& v) {
  const int n = u.size();
  const ShiftSequence a = find_flat(u, v);
  const std::uint32_t subsets = 1u << n;
  std::vector<std::vector<int>> bounds(n + 1, std::vector<int>(subsets));
  for (std::uint32_t p = 0; p < subsets; ++p) bounds[n][p] = ValueSet(p).size();
  for (int k = n - 1; k >= 1; --k) {
    const auto bases = shifted_interval(prefix_set(u, k), prefix_set(v, k), a[k], n);
    for (std::uint32_t p = 0; p < subsets; ++p) {
      int best = 0;
      for (ValueSet basis : bases) best = std::max(best, (basis & ValueSet(p)).size());
      bounds[k][p] = std::min(best, bounds[k + 1][p]);
    }
  }
  return bounds;
}

// Linear conditions on column k keeping every row set P within its bound: once
// rows P of columns 1..k-1 reach the bound, column k restricted to P must stay in
// their span.
std::vector<std::vector<mpq_class>> column_conditions(const RationalMatrix& m, int k,
                                                      const std::vector<int>& bounds) {
  const int n = m.rows();
  std::vector<std::vector<mpq_class>> rows;
  for (std::uint32_t p = 1; p < bounds.size(); ++p) {
    const ValueSet set(p);
    const auto members = set.elements();
    const int size = static_cast<int>(members.size());
    std::vector<std::vector<mpq_class>> annihilators;
    if (k == 1) {
      if (bounds[p] > 0) continue;
      for (int t = 0; t < size; ++t) {
        std::vector<mpq_class> y(size);
        y[t] = 1;
        annihilators.push_back(std::move(y));
      }
    } else {
      const RationalMatrix block = m.submatrix(set, k - 1);
      if (rank(block) < bounds[p]) continue;
      RationalMatrix transposed(k - 1, size);
      for (int r = 1; r <= size; ++r)
        for (int c = 1; c < k; ++c) transposed(c, r) = block(r, c);
      annihilators = nullspace(transposed);
    }
    for (const auto& y : annihilators) {
      std::vector<mpq_class> row(n);
      for (int t = 0; t < size; ++t) row[members[t] - 1] = y[t];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

} // namespace

Flag random_flag(int n, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-bound, bound);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RationalMatrix m(n, n);
    for (int r = 1; r <= n; ++r)
      for (int c = 1; c <= n; ++c) m(r, c) = draw(rng);
    if (determinant(m) != 0) return Flag(std::move(m));
  }
  throw SamplingError("could not draw an invertible matrix", n);
}

Flag sample_in_open_stratum(const Permutation& u, const Permutation& v, std::uint64_t seed,
                            const SamplerOptions& options) {
  if (u.size() != v.size())
    throw PreconditionError("permutations " + u.to_string() + " and " + v.to_string() +
                            " have different sizes");
  const int n = u.size();
  if (n > 7) throw ResourceError("sampling is limited to n <= 7");
  const auto bounds = rank_bounds(u, v);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-options.bound, options.bound);
  int failed_column = 1;
  for (int restart = 0; restart < options.restarts; ++restart) {
    if (restart > 0) rng.seed(seed + 0x9e3779b97f4a7c15ULL * restart);
    RationalMatrix m(n, n);
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k) {
      const auto conditions = column_conditions(m, k, bounds[k]);
      std::vector<std::vector<mpq_class>> basis;
      if (conditions.empty()) {
        for (int r = 0; r < n; ++r) {
          basis.emplace_back(n);
          basis.back()[r] = 1;
        }
      } else {
        RationalMatrix system(static_cast<int>(conditions.size()), n);
        for (std::size_t r = 0; r < conditions.size(); ++r)
          for (int c = 0; c < n; ++c) system(int(r) + 1, c + 1) = conditions[r][c];
        basis = nullspace(system);
      }
      bool placed = false;
      for (int attempt = 0; attempt < options.column_attempts && !placed; ++attempt) {
        std::vector<mpq_class> column(n);
        for (const auto& b : basis) {
          const int c = draw(rng);
          for (int r = 0; r < n; ++r) column[r] += c * b[r];
        }
        clear_denominators(column);
        for (int r = 1; r <= n; ++r) m(r, k) = column[r - 1];
        if (k < n)
          placed = determinant(m.submatrix(prefix_set(u, k), k)) != 0 &&
                   determinant(m.submatrix(prefix_set(v, k), k)) != 0;
        else
          placed = determinant(m) != 0;
      }
      if (!placed) {
        failed_column = k;
        ok = false;
      }
    }
    if (!ok) continue;
    Flag f(std::move(m));
    if (!member_T_plucker(u, v, f, true))
      throw InternalError("sampled flag for (" + u.to_string() + ", " + v.to_string() +
                          ") is not in the open stratum");
    return f;
  }
  throw SamplingError("sampling (" + u.to_string() + ", " + v.to_string() + ") failed at column " +
                          std::to_string(failed_column),
                      failed_column);
}

} // namespace qbg
