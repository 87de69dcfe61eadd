#include "fibint/exact_seq.hpp"
#include "fibint/fib_complex.hpp"
#include "fibint/quad.hpp"
#include "fibint/registry.hpp"
#include "fibint/specfun.hpp"
#include "fibint/verifier.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool passed;
  std::string detail;
};

int g_failures = 0;

void report(int number, const char* title, const std::function<Outcome()>& check) {
  Outcome o{false, ""};
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.passed) ++g_failures;
  std::printf("[%s] %d. %s: %s\n", o.passed ? "PASS" : "FAIL", number, title, o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

fibint::Integrand fn(std::function<double(double)> f) { return {std::move(f), {}}; }

Outcome lewin() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = fibint::run("LEWIN.*", std::nullopt, 5e-7);
  const double dt = seconds_since(t0);
  const bool ok = rep.n_fail == 0 && !rep.results.empty() && dt < 60.0;
  return {ok, fmt("%.0f/%.0f instances pass at atol 5e-7 in %.2f s", rep.n_pass, rep.results.size(), dt)};
}

Outcome stewart() {
  double worst = 0.0;
  int count = 0;
  for (long k = 1; k <= 5; ++k) {
    for (long n = 1; n <= 8; ++n) {
      const auto inst = fibint::instantiate("S1.STEWART", {{"k", k}, {"n", n}});
      const auto q = fibint::integrate_finite(inst.integrand, -1.0, 1.0, 1e-13);
      if (!q.converged) return {false, "quadrature did not converge"};
      const double lhs = q.value * n / std::ldexp(1.0, static_cast<int>(n));
      const double want = fibint::fib(k * n).to_double() / fibint::fib(k).to_double();
      worst = std::max(worst, std::fabs(lhs - want));
      ++count;
    }
  }
  return {worst <= 1e-7, fmt("%.0f (k, n) pairs, max |LHS n/2^n - F_kn/F_k| = %.3g", count, worst)};
}

Outcome complements() {
  long pass = 0, total = 0;
  for (const char* id : {"S2.BJU5530", "S2.XSN0TMC", "S2.COMPL2", "S2.DJFHEP4"}) {
    const auto rep = fibint::run(id, std::nullopt, 1e-7);
    pass += rep.n_pass;
    total += static_cast<long>(rep.results.size());
  }
  return {pass == total && total > 0, fmt("%.0f/%.0f instances pass at atol 1e-7", pass, total)};
}

Outcome anchors() {
  const auto& c = fibint::constants();
  const double la = c.ln_alpha, l2 = std::log(2.0), s5 = c.sqrt5;
  struct Anchor {
    double lhs;
    double rhs;
  };
  std::vector<Anchor> rows;

  auto fin = [](std::function<double(double)> f, double a, double b) {
    const auto q = fibint::integrate_finite(fn(std::move(f)), a, b, 1e-12);
    return q.converged ? q.value : NAN;
  };

  rows.push_back({fin(
                      [](double x) {
                        const double h = std::sin(kPi / 4.0 - x / 2.0);
                        return std::log((1.0 + std::sin(x)) / (2.0 * h * h));
                      },
                      0.0, kPi / 2.0),
                  4.0 * c.catalan});
  rows.push_back({fin([](double x) { return x * std::sin(x) / (5.0 - 4.0 * std::sin(x) * std::sin(x)); }, 0.0, kPi),
                  kPi / 2.0 * std::atan(2.0)});
  {
    const auto q = fibint::integrate_tan_halfpi(fn([](double t) {
                                                  const double d = 1.0 + 5.0 * t * t;
                                                  return 1.0 / (d * d);
                                                }),
                                                1e-12);
    rows.push_back({q.converged ? q.value : NAN, kPi * c.alpha / 16.0});
  }
  const double seven = fin([](double x) { return x * x / (5.0 + 4.0 * std::cos(2.0 * x)); }, 0.0, kPi / 2.0);
  rows.push_back({seven, kPi * kPi * kPi / 36.0 - kPi / 12.0 * l2 * l2});
  double li2_half = 0.0;
  for (int k = 60; k >= 1; --k) li2_half += std::ldexp(1.0, -k) / (static_cast<double>(k) * k);
  rows.push_back({seven, (kPi * kPi * kPi / 24.0 + kPi / 2.0 * li2_half) / 3.0});
  rows.push_back({fin([](double x) { return x * x / (3.0 - 2.0 * std::cos(2.0 * x)); }, 0.0, kPi),
                  (2.0 * kPi * kPi * kPi / 5.0 - kPi * la * la) / s5});
  rows.push_back({fin([](double x) { return x * x * std::cos(x) / (3.0 - 2.0 * std::cos(2.0 * x)); }, 0.0, kPi),
                  -kPi * kPi * kPi / 6.0 + 1.5 * kPi * la * la});

  double worst = 0.0;
  bool ok = true;
  for (const Anchor& a : rows) {
    const double e = std::fabs(a.lhs - a.rhs);
    if (!(e <= 1e-7)) ok = false;
    worst = std::max(worst, std::isfinite(e) ? e : INFINITY);
  }
  return {ok, fmt("%.0f anchor comparisons, max |LHS - RHS| = %.3g", rows.size(), worst)};
}

Outcome full_registry() {
  setenv("FIBINT_THREADS", "1", 1);
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = fibint::run("*");
  const double dt = seconds_since(t0);
  unsetenv("FIBINT_THREADS");
  long nonconv = 0;
  for (const auto& r : rep.results)
    if (!r.converged) ++nonconv;
  const bool ok = rep.n_fail == 0 && nonconv == 0 && dt <= 600.0;
  return {ok, fmt("%.0f/%.0f pass, ", rep.n_pass, rep.results.size()) +
                  fmt("%.0f non-convergences, %.2f s single-threaded", nonconv, dt)};
}

Outcome specfun_suite() {
  double worst_series = 0.0;
  for (int i = -95; i <= 95; ++i) {
    const double x = i / 100.0;
    double s = 0.0, p = 1.0;
    for (int k = 1; k <= 5000; ++k) {
      p *= x;
      s += p / (static_cast<double>(k) * k);
    }
    worst_series = std::max(worst_series, std::fabs(fibint::li2_real(x) - s));
  }
  const auto& c = fibint::constants();
  const double la = c.ln_alpha, b = c.beta, l2 = std::log(2.0);
  double worst_closed = 0.0;
  worst_closed = std::max(worst_closed, std::fabs(fibint::li2_real(0.5) - (kPi * kPi / 12.0 - l2 * l2 / 2.0)));
  worst_closed = std::max(worst_closed, std::fabs(fibint::li2_real(b * b) - (kPi * kPi / 15.0 - la * la)));
  worst_closed = std::max(worst_closed, std::fabs(fibint::li2_real(b) - (la * la / 2.0 - kPi * kPi / 15.0)));
  worst_closed = std::max(worst_closed, std::fabs(fibint::li2_real(-b) - (kPi * kPi / 10.0 - la * la)));
  double worst_cl = 0.0;
  for (int i = 1; i <= 100; ++i) {
    const double t = kPi * i / 101.0;
    worst_cl = std::max(worst_cl, std::fabs(0.5 * fibint::cl2(2.0 * t) - fibint::cl2(t) + fibint::cl2(kPi - t)));
    worst_cl = std::max(worst_cl, std::fabs(fibint::cl2(-t) + fibint::cl2(t)));
  }
  double worst_atan = 0.0;
  for (long s = 1; s <= 8; ++s) {
    const double bs = fibint::golden_powers(s).beta_pow;
    const double e = (s % 2 == 0)
                         ? std::atan(bs) - 0.5 * std::atan(2.0 / (fibint::fib_d(s) * c.sqrt5))
                         : std::atan(-bs) - 0.5 * std::atan(2.0 / fibint::lucas_d(s));
    worst_atan = std::max(worst_atan, std::fabs(e));
  }
  const bool ok = worst_series <= 1e-12 && worst_closed <= 1e-12 && worst_cl <= 1e-12 && worst_atan <= 1e-14;
  return {ok, fmt("series %.2g, closed values %.2g, ", worst_series, worst_closed) +
                  fmt("Cl2 identities %.2g, arctan relations %.2g", worst_cl, worst_atan)};
}

Outcome lemma2() {
  double worst = 0.0;
  for (const auto& r : fibint::lemma2_check(0, 10, 1e-5))
    worst = std::max({worst, r.fib_residual, r.lucas_residual});
  double coarse = 0.0, fine = 0.0;
  for (const auto& r : fibint::lemma2_check(0, 10, 1e-4)) coarse += r.fib_residual + r.lucas_residual;
  for (const auto& r : fibint::lemma2_check(0, 10, 5e-5)) fine += r.fib_residual + r.lucas_residual;
  const double ratio = coarse / fine;
  const bool ok = worst <= 1e-6 && ratio > 3.6 && ratio < 4.4;
  return {ok, fmt("max residual %.3g at h = 1e-5, reduction %.3f under h-halving", worst, ratio)};
}

Outcome negative_controls() {
  long flipped = 0, total = 0, big_flipped = 0, big_total = 0;
  for (const auto& c : fibint::catalog()) {
    for (const auto& a : fibint::default_grid(c)) {
      auto inst = fibint::instantiate(c, a);
      inst.rhs *= 1.0 + 1e-5;
      const bool flips = !fibint::verify_instance(inst).passed;
      const bool big = 1e-5 * std::fabs(inst.rhs) > inst.tol;
      ++total;
      if (flips) ++flipped;
      if (big) {
        ++big_total;
        if (flips) ++big_flipped;
      }
    }
  }
  return {flipped == total, fmt("%.0f/%.0f perturbed instances fail; ", flipped, total) +
                                fmt("%.0f/%.0f among those with 1e-5 |rhs| > tol", big_flipped, big_total)};
}

}  // namespace

int main() {
  report(1, "dilogarithm baseline", lewin);
  report(2, "power-integral desk check", stewart);
  report(3, "complement cases", complements);
  report(4, "named numeric anchors", anchors);
  report(5, "full registry", full_registry);
  report(6, "special functions", specfun_suite);
  report(7, "Fibonacci/Lucas function derivatives", lemma2);
  report(8, "negative controls", negative_controls);
  std::printf("%d of 8 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
