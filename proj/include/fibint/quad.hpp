#pragma once

// Adaptive double-exponential (tanh-sinh) quadrature on finite intervals, the
// half line and tan-substituted integrals over [0, pi/2).
//
// The rule is open: the integrand is never evaluated at a finite endpoint.
// Nodes that would round onto an endpoint are dropped.

#include <functional>
#include <vector>

namespace fibint {

struct Integrand {
  std::function<double(double)> eval;
  /// Abscissae where the integrand is sharply peaked or non-smooth. The
  /// interval is split there before integration.
  std::vector<double> singular_points;
};

struct QuadResult {
  double value = 0.0;
  double err_est = 0.0;
  long evals = 0;
  bool converged = false;
};

struct QuadOptions {
  /// Convergence target is max(tol, rel_tol * integral of |f|).
  double rel_tol = 1e-12;
  /// Tanh-sinh levels per panel; level k uses step 2^-k.
  int max_levels = 8;
  /// Maximum bisection depth once a panel fails to converge.
  int max_depth = 12;
};

inline constexpr double kMinQuadTol = 1e-13;
inline constexpr double kMaxQuadTol = 1e-3;

/// Throws std::invalid_argument unless a < b and tol in [1e-13, 1e-3].
QuadResult integrate_finite(const Integrand& f, double a, double b, double tol,
                            const QuadOptions& opts = {});

/// Integral over (0, inf) through x = t / (1 - t).
QuadResult integrate_half_line(const Integrand& f, double tol, const QuadOptions& opts = {});

/// Integral over (0, pi/2) of F(tan x), given g(t) = F(t). Computed as the
/// half-line integral of g(t) / (1 + t^2). Singular points are in t.
QuadResult integrate_tan_halfpi(const Integrand& g, double tol, const QuadOptions& opts = {});

}  // namespace fibint
