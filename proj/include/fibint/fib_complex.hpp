#pragma once

// Complex-valued Fibonacci and Lucas functions of a real argument,
//   f(x) = (alpha^x - beta^x) / sqrt5,   l(x) = alpha^x + beta^x,
// with beta^x taken on the principal branch: |beta|^x * exp(i*pi*x).

#include <complex>
#include <stdexcept>

namespace fibint {

using ComplexVal = std::complex<double>;

/// Largest |x| accepted by the functions below.
inline constexpr double kMaxFibFnArg = 200.0;

class NonFiniteValue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Principal-branch beta^x.
ComplexVal beta_pow(double x);

ComplexVal fib_fn(double x);
ComplexVal lucas_fn(double x);

/// f'(x) = (l(x) ln(alpha) - i pi beta^x) / sqrt5.
ComplexVal fib_fn_deriv(double x);

/// l'(x) = sqrt5 f(x) ln(alpha) + i pi beta^x.
ComplexVal lucas_fn_deriv(double x);

}  // namespace fibint
