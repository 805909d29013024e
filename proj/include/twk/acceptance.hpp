#pragma once

// Acceptance suite AC1..AC11. Shared by `twk verify` and the acceptance test
// binary. Every criterion is a pure function of its options, so independent
// criteria may run concurrently.

#include <cstdint>
#include <string>
#include <vector>

namespace twk::acceptance {

struct Options {
  /// Smaller sample sizes; time limits still apply.
  bool quick = false;
  std::uint64_t seed = 1;
};

struct Result {
  std::string id;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double seconds = 0;
  double time_limit = 0;  ///< seconds, 0 for none
  /// First failing checks, at most a handful.
  std::vector<std::string> details;
};

/// "AC1" .. "AC11".
const std::vector<std::string>& criterion_ids();

/// Unknown ids throw ParseError.
Result run_criterion(const std::string& id, const Options& options);

std::vector<Result> run_all(const Options& options, bool parallel);

/// "AC1 PASS  12345 checks  0.41 s (limit 10 s)  Hilbert reciprocity".
std::string summary_line(const Result& r);

}  // namespace twk::acceptance
