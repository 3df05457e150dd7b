#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qbg {

struct SuiteOptions {
  int n = 3;
  std::uint64_t seed = 1;
  /// Suite-specific sample count; 0 picks the suite default.
  int samples = 0;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::string summary;
  std::vector<std::string> failures;  ///< first few counterexamples
  std::vector<std::string> notes;     ///< informational, never failures
};

/// distance, samepath, bfp, increasing, rotation, tilted, flat-count, fixedpoints,
/// equivalence, stratify, plucker
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite or a size the suite does not support.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

} // namespace qbg
