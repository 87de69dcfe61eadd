#pragma once

// Shared helpers for the catalog translation units.

#include "fibint/exact_seq.hpp"
#include "fibint/registry.hpp"
#include "fibint/specfun.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace fibint::cat {

using Cases = std::vector<IdentityCase>;

inline constexpr double pi = std::numbers::pi;

inline double F(long n) { return fib_d(n); }
inline double L(long n) { return lucas_d(n); }
inline double apow(long r) { return golden_powers(r).alpha_pow; }
inline double bpow(long r) { return golden_powers(r).beta_pow; }
inline double s5() { return constants().sqrt5; }
inline double lna() { return constants().ln_alpha; }
inline double alpha() { return constants().alpha; }
inline double beta() { return constants().beta; }
inline double catalan() { return constants().catalan; }
inline double li2(double x) { return li2_real(x); }
inline double cl(double t) { return cl2(t); }

/// x^e for a small non-negative integer exponent.
inline double ipow(double x, long e) {
  double out = 1.0;
  for (long i = 0; i < e; ++i) out *= x;
  return out;
}

double binom(long n, long k);

ParamSpec p_any(const char* name, long lo, long hi, std::vector<long> excl = {});
ParamSpec p_even(const char* name, long lo, long hi, std::vector<long> excl = {});
ParamSpec p_odd(const char* name, long lo, long hi, std::vector<long> excl = {});

Strategy finite(double a, double b);
Strategy half_line();
Strategy tan_halfpi();

/// Fills default tolerances from the strategy.
IdentityCase make(std::string id, std::string anchor, Strategy s, std::vector<ParamSpec> params,
                  LhsBuilder lhs, RhsEval rhs, std::string note = {});

/// Integrand with no parameters.
Integrand plain(std::function<double(double)> f, std::vector<double> singular = {});

void add_lewin(Cases& out);
void add_s1_s3(Cases& out);
void add_s4_s5(Cases& out);
void add_s6_s7(Cases& out);
void add_s8_s9(Cases& out);
void add_s10(Cases& out);

}  // namespace fibint::cat
