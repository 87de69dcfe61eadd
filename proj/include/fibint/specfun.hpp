#pragma once

// Dilogarithm, Clausen's function Cl_2 and the constants used by the identity
// catalog. Everything is binary64.

#include "fibint/fib_complex.hpp"

#include <stdexcept>

namespace fibint {

struct SpecFunConfig {
  double series_tol = 1e-16;
  int max_terms = 200;

  /// Throws std::invalid_argument unless series_tol in (0, 1e-8] and max_terms >= 32.
  void validate() const;
};

/// Real dilogarithm for x <= 1. Throws std::domain_error for x > 1 or NaN.
double li2_real(double x, const SpecFunConfig& cfg = {});

/// Principal-branch dilogarithm on the closed unit disk. Throws
/// std::domain_error for |z| > 1 (a few ulps of slack are tolerated).
ComplexVal li2_complex(ComplexVal z, const SpecFunConfig& cfg = {});

/// Cl_2(theta) = sum sin(k theta) / k^2, odd and 2 pi-periodic.
double cl2(double theta, const SpecFunConfig& cfg = {});

struct Constants {
  double alpha;
  double beta;
  double ln_alpha;
  double sqrt5;
  double catalan;
};

/// Computed once (thread-safe) and cached.
const Constants& constants();

/// Catalan's constant from an accelerated alternating series.
double catalan_series();

}  // namespace fibint
