#include "catalog.hpp"

namespace fibint::cat {

double binom(long n, long k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (long i = 1; i <= k; ++i) out = out * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(out);
}

namespace {

ParamSpec spec(const char* name, Parity parity, long lo, long hi, std::vector<long> excl) {
  return ParamSpec{name, parity, lo, hi, std::move(excl)};
}

}  // namespace

ParamSpec p_any(const char* name, long lo, long hi, std::vector<long> excl) {
  return spec(name, Parity::any, lo, hi, std::move(excl));
}

ParamSpec p_even(const char* name, long lo, long hi, std::vector<long> excl) {
  return spec(name, Parity::even, lo, hi, std::move(excl));
}

ParamSpec p_odd(const char* name, long lo, long hi, std::vector<long> excl) {
  return spec(name, Parity::odd, lo, hi, std::move(excl));
}

Strategy finite(double a, double b) { return Strategy{StrategyKind::finite, a, b}; }
Strategy half_line() { return Strategy{StrategyKind::half_line, 0.0, 0.0}; }
Strategy tan_halfpi() { return Strategy{StrategyKind::tan_halfpi, 0.0, 0.0}; }

IdentityCase make(std::string id, std::string anchor, Strategy s, std::vector<ParamSpec> params,
                  LhsBuilder lhs, RhsEval rhs, std::string note) {
  IdentityCase c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.params = std::move(params);
  c.strategy = s;
  c.lhs_builder = std::move(lhs);
  c.rhs_eval = std::move(rhs);
  c.note = std::move(note);
  if (s.kind == StrategyKind::finite) {
    c.default_tol = 1e-7;
    c.quad_tol = 1e-10;
  } else {
    c.default_tol = 5e-7;
    c.quad_tol = 1e-9;
  }
  return c;
}

Integrand plain(std::function<double(double)> f, std::vector<double> singular) {
  return Integrand{std::move(f), std::move(singular)};
}

}  // namespace fibint::cat
