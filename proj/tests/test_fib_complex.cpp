#include "fibint/exact_seq.hpp"
#include "fibint/fib_complex.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using fibint::ComplexVal;

namespace {

constexpr double kPi = std::numbers::pi;
const double kS5 = std::sqrt(5.0);
const double kLnAlpha = std::log((1.0 + std::sqrt(5.0)) / 2.0);
const double kBeta = (1.0 - std::sqrt(5.0)) / 2.0;

}  // namespace

TEST_CASE("integer arguments reproduce F_j and L_j") {
  CHECK(std::abs(fibint::fib_fn(7) - ComplexVal(13, 0)) <= 1e-9);
  CHECK(std::abs(fibint::fib_fn(0)) <= 1e-15);
  CHECK(std::abs(fibint::lucas_fn(4) - ComplexVal(7, 0)) <= 1e-9);
  CHECK(std::abs(fibint::lucas_fn(0) - ComplexVal(2, 0)) <= 1e-15);
  CHECK(std::abs(fibint::lucas_fn(-3) - ComplexVal(-4, 0)) <= 1e-9);
  for (int j = -20; j <= 20; ++j) {
    const ComplexVal f = fibint::fib_fn(j), l = fibint::lucas_fn(j);
    CHECK(std::fabs(f.real() - fibint::fib_d(j)) <= 1e-8);
    CHECK(std::fabs(f.imag()) <= 1e-8);
    CHECK(std::fabs(l.real() - fibint::lucas_d(j)) <= 1e-8);
    CHECK(std::fabs(l.imag()) <= 1e-8);
  }
}

TEST_CASE("l(x)^2 - 5 f(x)^2 = 4 exp(i pi x)") {
  for (double x : {0.5, -1.25, 2.75, 3.1}) {
    const ComplexVal f = fibint::fib_fn(x), l = fibint::lucas_fn(x);
    const ComplexVal want = 4.0 * std::exp(ComplexVal(0.0, kPi * x));
    CHECK(std::abs(l * l - 5.0 * f * f - want) <= 1e-10);
  }
}

TEST_CASE("closed-form derivatives at integers") {
  const ComplexVal d0 = fibint::fib_fn_deriv(0);
  CHECK(d0.real() == doctest::Approx(2.0 * kLnAlpha / kS5).epsilon(1e-14));
  CHECK(d0.real() == doctest::Approx(0.4304089409640040).epsilon(1e-14));
  CHECK(d0.imag() == doctest::Approx(-1.404962946208145).epsilon(1e-14));
  CHECK(fibint::fib_fn_deriv(2).imag() == doctest::Approx(-0.5366480925173213).epsilon(1e-13));

  const ComplexVal l0 = fibint::lucas_fn_deriv(0);
  CHECK(std::fabs(l0.real()) <= 1e-12);
  CHECK(std::fabs(l0.imag() - kPi) <= 1e-12);
  const ComplexVal l3 = fibint::lucas_fn_deriv(3);
  CHECK(l3.real() == doctest::Approx(2.152044704820020).epsilon(1e-13));
  CHECK(l3.imag() == doctest::Approx(-0.7416294238611399).epsilon(1e-13));

  for (int j = -10; j <= 10; ++j) {
    const double bj = std::pow(kBeta, j);
    const ComplexVal df = fibint::fib_fn_deriv(j), dl = fibint::lucas_fn_deriv(j);
    CHECK(df.real() == doctest::Approx(fibint::lucas_d(j) * kLnAlpha / kS5).epsilon(1e-12));
    CHECK(df.imag() == doctest::Approx(-kPi * bj / kS5).epsilon(1e-12));
    CHECK(dl.real() == doctest::Approx(fibint::fib_d(j) * kS5 * kLnAlpha).epsilon(1e-12));
    CHECK(dl.imag() == doctest::Approx(kPi * bj).epsilon(1e-12));
  }
}

TEST_CASE("derivatives match central differences with second-order convergence") {
  for (int j = 0; j <= 12; ++j) {
    double prev = 0.0;
    for (double h : {1e-4, 1e-5, 1e-6}) {
      const ComplexVal fd = (fibint::fib_fn(j + h) - fibint::fib_fn(j - h)) / (2.0 * h);
      const ComplexVal ld = (fibint::lucas_fn(j + h) - fibint::lucas_fn(j - h)) / (2.0 * h);
      const double ef = std::abs(fd - fibint::fib_fn_deriv(j));
      const double el = std::abs(ld - fibint::lucas_fn_deriv(j));
      CHECK(ef <= 1e-6 * std::max(1.0, std::abs(fibint::fib_fn_deriv(j))));
      CHECK(el <= 1e-6 * std::max(1.0, std::abs(fibint::lucas_fn_deriv(j))));
      if (h == 1e-5) CHECK(ef <= prev / 10.0 + 1e-8);
      prev = ef;
    }
  }
}

TEST_CASE("fib_fn is continuous on [-5, 5]") {
  const double step = 1e-3;
  ComplexVal prev = fibint::fib_fn(-5.0);
  for (int i = 1; i <= 10000; ++i) {
    const double x = -5.0 + i * step;
    const ComplexVal cur = fibint::fib_fn(x);
    CHECK(std::abs(cur - prev) <= 10.0 * step * std::abs(fibint::fib_fn_deriv(x)) + 1e-12);
    prev = cur;
  }
}

TEST_CASE("arguments outside the supported range") {
  CHECK_THROWS_AS(fibint::fib_fn(fibint::kMaxFibFnArg + 1.0), std::domain_error);
  CHECK_THROWS_AS(fibint::lucas_fn_deriv(-fibint::kMaxFibFnArg - 1.0), std::domain_error);
  CHECK_THROWS_AS(fibint::fib_fn(std::nan("")), std::domain_error);
}
