#pragma once

// Numerical verification of catalog instances: quadrature of the left-hand
// side against the closed-form right-hand side.

#include "fibint/registry.hpp"

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fibint {

/// Relative component of the pass threshold.
inline constexpr double kVerifyRelTol = 1e-8;

struct VerificationResult {
  std::string case_id;
  Assignment assignment;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double tol = 0.0;
  bool passed = false;
  long quad_evals = 0;
  bool converged = false;
  std::string note;
};

struct Report {
  std::vector<VerificationResult> results;
  long n_pass = 0;
  long n_fail = 0;
  std::chrono::duration<double> wall_time{0.0};
};

/// Inclusive integer range applied to every parameter of that name.
using GridOverride = std::map<std::string, std::pair<long, long>>;

/// Never throws: evaluation failures become failed results with a note.
VerificationResult verify_instance(const BoundInstance& inst);

/// Verifies every instance of every case whose id matches the glob. Results
/// are sorted by (case_id, assignment). Parallelism is capped by the
/// FIBINT_THREADS environment variable (default: hardware concurrency).
/// Throws std::invalid_argument when nothing matches, when a tolerance is
/// outside [1e-13, 1e-3] or when an override leaves a case with no
/// admissible value.
Report run(const std::string& filter, const std::optional<GridOverride>& grid = std::nullopt,
           std::optional<double> tol = std::nullopt);

/// Grid of a case after applying overrides; values outside the case's
/// domain are dropped.
std::vector<Assignment> effective_grid(const IdentityCase& c, const GridOverride& grid);

struct Lemma2Residual {
  int j = 0;
  double fib_residual = 0.0;
  double lucas_residual = 0.0;
};

/// Central-difference check of the derivatives of the complex Fibonacci and
/// Lucas functions at each integer j in [j_lo, j_hi]. Throws
/// std::invalid_argument unless h is in [1e-7, 1e-3].
std::vector<Lemma2Residual> lemma2_check(int j_lo, int j_hi, double h);

}  // namespace fibint
