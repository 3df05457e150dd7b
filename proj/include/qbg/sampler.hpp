#pragma once

#include <cstdint>

#include "qbg/flag.hpp"

namespace qbg {

struct SamplerOptions {
  int bound = 100;           ///< integer coefficients drawn from [-bound, bound]
  int column_attempts = 20;  ///< redraws of one column before restarting
  int restarts = 50;         ///< full restarts, each reseeded
};

/// Flag with integer entries in [-bound, bound] and nonzero determinant.
Flag random_flag(int n, std::uint64_t seed, int bound = 100);

/// A point of the open stratum for (u,v), filled column by column. Level k of the
/// flag may not exceed the row-set ranks of the rotated Richardson cell for
/// (u[k], v[k], a_k) at any level >= k; these bounds are linear in column k. Each
/// column is a random integer combination of the allowed subspace, redrawn until
/// P_{u[k]} and P_{v[k]} are nonzero. Throws SamplingError carrying the failing
/// column once the budget is spent, ResourceError for n > 7.
Flag sample_in_open_stratum(const Permutation& u, const Permutation& v, std::uint64_t seed,
                            const SamplerOptions& options = {});

} // namespace qbg
