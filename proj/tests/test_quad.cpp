#include "fibint/quad.hpp"

#include <stdexcept>
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

using fibint::Integrand;
using fibint::QuadResult;

namespace {

constexpr double kPi = std::numbers::pi;

Integrand fn(std::function<double(double)> f) { return {std::move(f), {}}; }

enum class Domain { finite, half_line };

struct Known {
  std::string name;
  Domain domain;
  double a;
  double b;
  std::function<double(double)> f;
  double exact;
};

std::vector<Known> battery() {
  return {
      {"x sin x", Domain::finite, 0.0, kPi, [](double x) { return x * std::sin(x); }, kPi},
      {"exp", Domain::finite, 0.0, 1.0, [](double x) { return std::exp(x); }, std::exp(1.0) - 1.0},
      {"log", Domain::finite, 0.0, 1.0, [](double x) { return std::log(x); }, -1.0},
      {"rsqrt", Domain::finite, 0.0, 1.0, [](double x) { return 1.0 / std::sqrt(x); }, 2.0},
      {"semicircle", Domain::finite, -1.0, 1.0, [](double x) { return std::sqrt(1.0 - x * x); }, kPi / 2.0},
      {"lorentz", Domain::finite, 0.0, 1.0, [](double x) { return 1.0 / (1.0 + x * x); }, kPi / 4.0},
      {"log sin", Domain::finite, 0.0, kPi / 2.0, [](double x) { return std::log(std::sin(x)); },
       -kPi / 2.0 * std::log(2.0)},
      {"x log1p", Domain::finite, 0.0, 1.0, [](double x) { return x * std::log1p(x); }, 0.25},
      {"cubic", Domain::finite, 0.0, 2.0, [](double x) { return x * x * x; }, 4.0},
      {"sin^2", Domain::finite, 0.0, kPi, [](double x) { return std::sin(x) * std::sin(x); }, kPi / 2.0},
      {"1/(2+cos)", Domain::finite, 0.0, 2.0 * kPi, [](double x) { return 1.0 / (2.0 + std::cos(x)); },
       2.0 * kPi / std::sqrt(3.0)},
      {"cos 10x", Domain::finite, 0.0, kPi / 20.0, [](double x) { return std::cos(10.0 * x); }, 0.1},
      {"peak", Domain::finite, -1.0, 1.0, [](double x) { return 1.0 / (1e-2 + x * x); }, 20.0 * std::atan(10.0)},
      {"exp(-x)", Domain::half_line, 0, 0, [](double x) { return std::exp(-x); }, 1.0},
      {"1/(1+x^4)", Domain::half_line, 0, 0, [](double x) { return 1.0 / (1.0 + x * x * x * x); },
       kPi / (2.0 * std::sqrt(2.0))},
      {"atan/(1+x^2)", Domain::half_line, 0, 0, [](double x) { return std::atan(x) / (1.0 + x * x); },
       kPi * kPi / 8.0},
      {"x^2/(1+x^2)^2", Domain::half_line, 0, 0,
       [](double x) { return x * x / ((1.0 + x * x) * (1.0 + x * x)); }, kPi / 4.0},
      {"log/(1+x^2)", Domain::half_line, 0, 0, [](double x) { return std::log(x) / (1.0 + x * x); }, 0.0},
      {"gauss", Domain::half_line, 0, 0, [](double x) { return std::exp(-x * x); }, std::sqrt(kPi) / 2.0},
      {"x/((1+x^2)(1+2x^2))", Domain::half_line, 0, 0,
       [](double x) { return x / ((1.0 + x * x) * (1.0 + 2.0 * x * x)); }, std::log(2.0) / 2.0},
  };
}

QuadResult integrate(const Known& k, double tol) {
  if (k.domain == Domain::finite) return fibint::integrate_finite(fn(k.f), k.a, k.b, tol);
  return fibint::integrate_half_line(fn(k.f), tol);
}

}  // namespace

TEST_CASE("finite interval examples") {
  const QuadResult r = fibint::integrate_finite(fn([](double x) { return x * std::sin(x); }), 0.0, kPi, 1e-10);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - kPi) <= 1e-10);

  const QuadResult s = fibint::integrate_finite(fn([](double x) { return 1.0 + std::sqrt(5.0) * x; }), -1.0, 1.0, 1e-12);
  CHECK(std::fabs(s.value - 2.0) <= 1e-12);

  const QuadResult t =
      fibint::integrate_finite(fn([](double x) { return x * x / (3.0 - 2.0 * std::cos(2.0 * x)); }), 0.0, kPi, 1e-10);
  CHECK(std::fabs(t.value - 5.2212313983490574) <= 1e-9);
}

TEST_CASE("half-line examples") {
  CHECK(std::fabs(fibint::integrate_half_line(fn([](double x) { return 1.0 / (1.0 + x * x); }), 1e-10).value -
                  kPi / 2.0) <= 1e-10);
  CHECK(std::fabs(fibint::integrate_half_line(
                      fn([](double x) { return x / ((1.0 + x * x) * (1.0 + 2.0 * x * x)); }), 1e-9)
                      .value -
                  std::log(2.0) / 2.0) <= 1e-9);
  CHECK(std::fabs(fibint::integrate_half_line(
                      fn([](double x) { return x / ((1.0 + x * x) * (3.0 + x * x)); }), 1e-9)
                      .value -
                  std::log(3.0) / 4.0) <= 1e-9);
}

TEST_CASE("tan-substituted examples") {
  CHECK(std::fabs(fibint::integrate_tan_halfpi(fn([](double) { return 1.0; }), 1e-10).value - kPi / 2.0) <= 1e-10);
  const QuadResult a = fibint::integrate_tan_halfpi(
      fn([](double t) { return t * t / (1.0 + 3.0 * t * t + t * t * t * t); }), 1e-9);
  CHECK(std::fabs(a.value - 0.16583338058675134) <= 1e-9);
  const QuadResult b = fibint::integrate_tan_halfpi(
      fn([](double t) {
        const double d = 1.0 + 5.0 * t * t;
        return 1.0 / (d * d);
      }),
      1e-9);
  CHECK(std::fabs(b.value - 0.31770023076970374) <= 1e-9);
}

TEST_CASE("linearity") {
  const std::vector<std::function<double(double)>> fs = {
      [](double x) { return std::exp(-x) * std::cos(3.0 * x); },
      [](double x) { return 1.0 / (1.5 + std::sin(x)); },
      [](double x) { return x * x * std::log1p(x); },
  };
  for (const auto& f : fs) {
    const double base = fibint::integrate_finite(fn(f), 0.0, 2.0, 1e-12).value;
    for (double c : {2.0, -3.0, 0.5}) {
      const double scaled = fibint::integrate_finite(fn([&](double x) { return c * f(x); }), 0.0, 2.0, 1e-12).value;
      CHECK(std::fabs(scaled - c * base) <= 1e-12 * std::fabs(c * base));
    }
  }
}

TEST_CASE("interval additivity") {
  auto f = [](double x) { return std::log(x) * std::cos(x); };
  const QuadResult whole = fibint::integrate_finite(fn(f), 0.0, 3.0, 1e-11);
  const QuadResult left = fibint::integrate_finite(fn(f), 0.0, 1.2, 1e-11);
  const QuadResult right = fibint::integrate_finite(fn(f), 1.2, 3.0, 1e-11);
  CHECK(std::fabs(whole.value - (left.value + right.value)) <=
        whole.err_est + left.err_est + right.err_est + 1e-14);
}

TEST_CASE("error estimates are honest on a battery with known integrals") {
  const auto cases = battery();
  REQUIRE(cases.size() == 20);
  int honest = 0;
  for (const Known& k : cases) {
    CAPTURE(k.name);
    const double tol = 1e-10;
    const QuadResult r = integrate(k, tol);
    CHECK(r.converged);
    CHECK(r.err_est >= 0.0);
    CHECK(r.err_est <= tol);
    const double err = std::fabs(r.value - k.exact);
    CHECK(err <= tol);
    // Rounding in the reference value itself is a few ulps.
    if (err <= 10.0 * r.err_est + 8.0 * std::numeric_limits<double>::epsilon() * std::fabs(k.exact)) ++honest;
  }
  CHECK(honest >= 19);
}

TEST_CASE("the rule never evaluates at finite endpoints") {
  std::vector<double> seen;
  auto record = [&](double x) {
    seen.push_back(x);
    return std::log(x) + std::log(1.0 - x);
  };
  const QuadResult r = fibint::integrate_finite(fn(record), 0.0, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(std::fabs(r.value + 2.0) <= 1e-12);
  for (double x : seen) {
    CHECK(x > 0.0);
    CHECK(x < 1.0);
  }

  seen.clear();
  const QuadResult t = fibint::integrate_tan_halfpi(fn([&](double u) {
                                                     seen.push_back(u);
                                                     return std::log(u * u) ;
                                                   }),
                                                   1e-10);
  CHECK(t.converged);
  CHECK(std::fabs(t.value) <= 1e-10);
  for (double u : seen) {
    CHECK(u > 0.0);
    CHECK(std::isfinite(u));
  }
}

TEST_CASE("singular points split the interval") {
  const double c = 0.3;
  Integrand kink{[c](double x) { return std::fabs(x - c); }, {c}};
  const QuadResult r = fibint::integrate_finite(kink, 0.0, 1.0, 1e-12);
  CHECK(r.converged);
  CHECK(std::fabs(r.value - (c * c + (1.0 - c) * (1.0 - c)) / 2.0) <= 1e-12);
}

TEST_CASE("bad arguments and non-finite integrands") {
  auto one = fn([](double) { return 1.0; });
  CHECK_THROWS_AS(fibint::integrate_finite(one, 1.0, 0.0, 1e-10), std::invalid_argument);
  CHECK_THROWS_AS(fibint::integrate_finite(one, 0.0, 1.0, 1e-14), std::invalid_argument);
  CHECK_THROWS_AS(fibint::integrate_finite(one, 0.0, 1.0, 1e-2), std::invalid_argument);
  CHECK_THROWS_AS(fibint::integrate_half_line(one, 0.0), std::invalid_argument);
  const QuadResult r = fibint::integrate_finite(fn([](double x) { return x < 0.5 ? 1.0 : NAN; }), 0.0, 1.0, 1e-10);
  CHECK_FALSE(r.converged);
  CHECK(std::isnan(r.value));
}
