#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace twc::verify {

inline constexpr std::uint64_t kDefaultSeed = 1000003;

struct ClaimResult {
  std::string id;        // stable identifier, e.g. "weights-m5-family1"
  std::string subject;   // one-line description of what is being checked
  std::string status;    // PASS, FAIL or SKIPPED
  std::string expected;
  std::string actual;
  double elapsed = 0.0;  // seconds
};

struct SuiteOptions {
  std::vector<int> ms = {3, 5, 7};  // degrees to cover
  bool heavy = false;               // actually run the m = 7 claims
  std::uint64_t seed = kDefaultSeed;
  int threads = 0;
};

struct SuiteResult {
  std::vector<ClaimResult> items;
  int failures() const;
  int passes() const;
  int skipped() const;
  bool all_pass() const;  // no FAIL entries (SKIPPED is fine)
};

// Runs every verification claim at the requested scales.  m = 7 claims are
// emitted as SKIPPED unless heavy is set; integer-only claims always run.
SuiteResult run_suite(const SuiteOptions& opt);

}  // namespace twc::verify
