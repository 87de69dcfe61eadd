#include "fibint/fib_complex.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace fibint {

namespace {

constexpr double kSqrt5 = 2.2360679774997896964;
constexpr double kAlpha = 1.6180339887498948482;

double ln_alpha() {
  static const double v = std::log(kAlpha);
  return v;
}

void check_arg(double x, const char* what) {
  if (!std::isfinite(x) || std::abs(x) > kMaxFibFnArg) {
    throw std::domain_error(std::string(what) + ": argument outside [-200, 200]");
  }
}

ComplexVal checked(ComplexVal z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw NonFiniteValue(std::string(what) + ": non-finite result");
  }
  return z;
}

// Integer x gives an exact real phase (-1)^x; sin(pi*x) in binary64 does not.
ComplexVal phase(double x) {
  if (x == std::nearbyint(x)) {
    return std::fmod(std::abs(x), 2.0) == 0.0 ? ComplexVal(1.0, 0.0) : ComplexVal(-1.0, 0.0);
  }
  const double px = std::numbers::pi * x;
  return {std::cos(px), std::sin(px)};
}

}  // namespace

ComplexVal beta_pow(double x) {
  check_arg(x, "beta_pow");
  // |beta| = 1/alpha
  return std::exp(-x * ln_alpha()) * phase(x);
}

ComplexVal fib_fn(double x) {
  check_arg(x, "fib_fn");
  const double a = std::exp(x * ln_alpha());
  return checked((a - beta_pow(x)) / kSqrt5, "fib_fn");
}

ComplexVal lucas_fn(double x) {
  check_arg(x, "lucas_fn");
  const double a = std::exp(x * ln_alpha());
  return checked(a + beta_pow(x), "lucas_fn");
}

ComplexVal fib_fn_deriv(double x) {
  check_arg(x, "fib_fn_deriv");
  const ComplexVal i_pi(0.0, std::numbers::pi);
  return checked((lucas_fn(x) * ln_alpha() - i_pi * beta_pow(x)) / kSqrt5, "fib_fn_deriv");
}

ComplexVal lucas_fn_deriv(double x) {
  check_arg(x, "lucas_fn_deriv");
  const ComplexVal i_pi(0.0, std::numbers::pi);
  return checked(kSqrt5 * fib_fn(x) * ln_alpha() + i_pi * beta_pow(x), "lucas_fn_deriv");
}

}  // namespace fibint
