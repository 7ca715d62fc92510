#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gjs {

struct VerifyOptions {
  int max_degree = 6;
  // Smaller sizes where a check is slow; the acceptance thresholds still apply.
  bool fast = false;
  std::uint64_t seed = 20240917;
  double tol = 1e-9;
};

struct CheckRecord {
  std::string id;
  bool pass = true;
  // Largest deviation seen, or a description of the first failure.
  std::string witness;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;
  int passed() const;
  int failed() const;
  bool ok() const { return failed() == 0; }
};

// isomorphism, trace, positivity, combinatorics, cdelta, factor, poisson,
// freeness, planar. "all" concatenates them in this order.
const std::vector<std::string>& suite_names();
// Throws InputError for an unknown suite.
VerificationReport run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace gjs
