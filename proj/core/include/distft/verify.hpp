#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "distft/dist_expr.hpp"

namespace distft::verify {

struct CheckResult {
  std::string name;
  std::string params;
  std::string expected;
  std::string got;
  double err = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  double tol = 0.0;  // 0 = per-suite defaults
  std::uint64_t seed = 42;
  std::string filter;  // substring on the check name
};

// Runs the invariant suites of the transform algebra, the series module,
// the exact sinc integrals and the quadrature oracle. Results come back
// sorted by (name, params).
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

std::string format_check_line(const CheckResult& c);

// Random expression over the invertible table kinds with plain Gaussian
// rational coefficients (shared by the property suites and benchmarks).
dist::DistExpr random_invertible_expr(std::mt19937_64& rng);

}  // namespace distft::verify
