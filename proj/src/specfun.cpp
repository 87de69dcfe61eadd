#include "fibint/specfun.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <limits>
#include <cmath>
#include <numbers>
#include <string>

namespace fibint {

namespace {

using std::numbers::pi;
constexpr double kPi2Over6 = pi * pi / 6.0;

// B_0 .. B_{2*kBernoulliPairs}, exact via the Akiyama-Tanigawa algorithm and
// rounded once. Only the even-indexed entries (and B_1) are non-zero.
constexpr int kBernoulliPairs = 40;

const std::array<double, 2 * kBernoulliPairs + 1>& bernoulli_table() {
  static const auto table = [] {
    using boost::multiprecision::cpp_rational;
    constexpr int n_max = 2 * kBernoulliPairs;
    std::array<double, n_max + 1> out{};
    std::array<cpp_rational, n_max + 1> a;
    for (int m = 0; m <= n_max; ++m) {
      a[m] = cpp_rational(1, m + 1);
      for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
      // a[0] is B_m with the B_1 = +1/2 convention.
      out[m] = static_cast<double>(a[0]);
    }
    out[1] = -0.5;
    return out;
  }();
  return table;
}

double li2_series(double x, const SpecFunConfig& cfg) {
  double sum = 0.0;
  double xk = 1.0;
  for (int k = 1; k <= cfg.max_terms; ++k) {
    xk *= x;
    const double term = xk / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) <= cfg.series_tol * std::abs(sum)) return sum;
  }
  throw std::runtime_error("li2_real: series did not converge within max_terms");
}

// Li2(w) = sum_n B_n u^{n+1} / (n+1)!, u = -log(1 - w); needs |u| < 2 pi.
ComplexVal li2_bernoulli(ComplexVal w, const SpecFunConfig& cfg) {
  const auto& bern = bernoulli_table();
  const ComplexVal u = -std::log(1.0 - w);
  const ComplexVal u2 = u * u;
  ComplexVal sum = u - u2 / 4.0;
  ComplexVal upow = u;  // u^{2k+1} / (2k+1)!
  for (int k = 1; k <= kBernoulliPairs; ++k) {
    upow *= u2 / (static_cast<double>(2 * k) * (2 * k + 1));
    const ComplexVal term = bern[2 * k] * upow;
    sum += term;
    if (std::abs(term) <= cfg.series_tol * std::abs(sum)) return sum;
  }
  return sum;
}

}  // namespace

void SpecFunConfig::validate() const {
  if (!(series_tol > 0.0 && series_tol <= 1e-8)) {
    throw std::invalid_argument("SpecFunConfig: series_tol must lie in (0, 1e-8]");
  }
  if (max_terms < 32) throw std::invalid_argument("SpecFunConfig: max_terms must be >= 32");
}

double li2_real(double x, const SpecFunConfig& cfg) {
  cfg.validate();
  if (std::isnan(x) || x > 1.0) {
    throw std::domain_error("li2_real: argument " + std::to_string(x) + " > 1");
  }
  if (x == 1.0) return kPi2Over6;
  if (x < -1.0) {
    // Inversion: Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x).
    const double l = std::log(-x);
    return -kPi2Over6 - 0.5 * l * l - li2_real(1.0 / x, cfg);
  }
  if (x < -0.5) {
    // Landen: Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2, with x/(x-1) in (1/3, 1/2].
    const double l = std::log1p(-x);
    return -li2_series(x / (x - 1.0), cfg) - 0.5 * l * l;
  }
  if (x <= 0.5) return li2_series(x, cfg);
  // Reflection: Li2(x) = pi^2/6 - ln x ln(1-x) - Li2(1-x).
  return kPi2Over6 - std::log(x) * std::log1p(-x) - li2_series(1.0 - x, cfg);
}

ComplexVal li2_complex(ComplexVal z, const SpecFunConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("li2_complex: non-finite argument");
  }
  if (std::abs(z) > 1.0 + 8.0 * std::numeric_limits<double>::epsilon()) {
    throw std::domain_error("li2_complex: |z| > 1");
  }
  if (z == ComplexVal(0.0, 0.0)) return {0.0, 0.0};
  if (z == ComplexVal(1.0, 0.0)) return {kPi2Over6, 0.0};
  if (z.real() > 0.5) {
    // |1 - z| < 1 and Re(1 - z) < 1/2 here.
    return kPi2Over6 - std::log(z) * std::log(1.0 - z) - li2_bernoulli(1.0 - z, cfg);
  }
  return li2_bernoulli(z, cfg);
}

double cl2(double theta, const SpecFunConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(theta)) throw std::domain_error("cl2: non-finite argument");
  constexpr double two_pi = 2.0 * pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  double sign = 1.0;
  if (t > pi) {
    t = two_pi - t;
    sign = -1.0;
  }
  if (t == 0.0) return 0.0;
  // Cl2(t) = t - t ln t + sum_k |B_2k| t^{2k+1} / (2k (2k+1)!), |t| < 2 pi.
  const auto& bern = bernoulli_table();
  const double t2 = t * t;
  double sum = t - t * std::log(t);
  double tpow = t;  // t^{2k+1} / (2k+1)!
  for (int k = 1; k <= kBernoulliPairs; ++k) {
    tpow *= t2 / (static_cast<double>(2 * k) * (2 * k + 1));
    const double term = std::abs(bern[2 * k]) * tpow / (2.0 * k);
    sum += term;
    if (term <= cfg.series_tol * std::abs(sum)) break;
  }
  return sign * sum;
}

double catalan_series() {
  // Cohen, Rodriguez Villegas and Zagier, algorithm 1, applied to
  // G = sum_j (-1)^j / (2j+1)^2.
  constexpr int n = 26;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = (d + 1.0 / d) / 2.0;
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const double ak = 1.0 / ((2.0 * k + 1.0) * (2.0 * k + 1.0));
    s += c * ak;
    b = (static_cast<double>(k + n) * (k - n)) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

const Constants& constants() {
  static const Constants c = [] {
    const double sqrt5 = std::sqrt(5.0);
    const double alpha = (1.0 + sqrt5) / 2.0;
    return Constants{alpha, (1.0 - sqrt5) / 2.0, std::log(alpha), sqrt5, catalan_series()};
  }();
  return c;
}

}  // namespace fibint
