#include "catalog.hpp"

#include <string>

namespace fibint::cat {

namespace {

// int_0^inf x^{2m+1} / ((1 + x^2)(a + b x^2)^{m+1}) dx, written to avoid overflow.
Integrand first_form(double a, double b, long m) {
  return plain([=](double x) {
    const double d = a + b * x * x;
    return ipow(x * x / d, m) * x / ((1.0 + x * x) * d);
  });
}

// int_0^inf x / ((1 + x^2)(a + b x^2)^{m+1}) dx
Integrand second_form(double a, double b, long m) {
  return plain([=](double x) {
    const double d = a + b * x * x;
    return x / ((1.0 + x * x) * ipow(d, m + 1));
  });
}

// Adds the two equal integral forms of a section-4 identity: id with
// (1 + q x^2) in the first form and id.ALT with (q + x^2) in the second. The
// builder returns {a1, b1, a2, b2}.
struct Coeffs {
  double a1, b1, a2, b2;
};

void add_pair(Cases& out, const std::string& id, const std::string& anchor,
              std::vector<ParamSpec> params, std::function<Coeffs(const Params&)> coeffs,
              RhsEval rhs, const std::string& note = {}) {
  out.push_back(make(
      id, anchor + ", first integral form", half_line(), params,
      [coeffs](const Params& p) {
        const Coeffs c = coeffs(p);
        return first_form(c.a1, c.b1, p.m);
      },
      rhs, note));
  out.push_back(make(
      id + ".ALT", anchor + ", second integral form", half_line(), params,
      [coeffs](const Params& p) {
        const Coeffs c = coeffs(p);
        return second_form(c.a2, c.b2, p.m);
      },
      rhs, note));
}

// -1/2 sum_{j=1}^m 1/(j q^j D^{m-j+1}) + 1/2 ln q / D^{m+1}, D = q - 1.
double shifted_rhs(double q, double d, long m) {
  double s = 0.0;
  for (long j = 1; j <= m; ++j) s += 1.0 / (j * ipow(q, j) * ipow(d, m - j + 1));
  return -0.5 * s + 0.5 * std::log(q) / ipow(d, m + 1);
}

double sgn(long e) { return e % 2 == 0 ? 1.0 : -1.0; }

void add_section4(Cases& out) {
  add_pair(
      out, "S4.KJ2W249", "eq. (kj2w249) q = F_{2r}", {p_any("m", 0, 4), p_any("r", 1, 9, {1})},
      [](const Params& p) {
        const double q = F(2 * p.r);
        return Coeffs{1.0, q, q, 1.0};
      },
      [](const Params& p) {
        const long r = p.r;
        const double d = r % 2 != 0 ? F(r - 1) * L(r + 1) : L(r - 1) * F(r + 1);
        return shifted_rhs(F(2 * r), d, p.m);
      },
      "r = 1 excluded: F_2 = 1 makes the right-hand side 0/0");

  add_pair(
      out, "S4.DPBN6CY", "eq. (dpbn6cy) q = F_{2r+1}", {p_any("m", 0, 4), p_any("r", 1, 9)},
      [](const Params& p) {
        const double q = F(2 * p.r + 1);
        return Coeffs{1.0, q, q, 1.0};
      },
      [](const Params& p) {
        const long r = p.r;
        const double d = r % 2 != 0 ? L(r) * F(r + 1) : F(r) * L(r + 1);
        return shifted_rhs(F(2 * r + 1), d, p.m);
      });

  add_pair(
      out, "S4.Q2NVIQW", "eq. (q2nviqw) q = L_{2r+1}", {p_any("m", 0, 4), p_any("r", 1, 9)},
      [](const Params& p) {
        const double q = L(2 * p.r + 1);
        return Coeffs{1.0, q, q, 1.0};
      },
      [](const Params& p) {
        const long r = p.r;
        const double d = r % 2 != 0 ? L(r) * L(r + 1) : 5.0 * F(r) * F(r + 1);
        return shifted_rhs(L(2 * r + 1), d, p.m);
      });

  add_pair(
      out, "S4.PDJJQGD", "eq. (pdjjqgd) m-th q-derivative, q = alpha^r",
      {p_any("m", 0, 4), p_any("r", -4, 4, {0})},
      [](const Params& p) {
        const double q = apow(p.r);
        return Coeffs{1.0, q, q, 1.0};
      },
      [](const Params& p) {
        const double q = apow(p.r);
        const long m = p.m;
        double s = 0.0;
        for (long j = 1; j <= m; ++j) s += sgn(m - j) / (j * ipow(q, j) * ipow(1.0 - q, m - j + 1));
        return 0.5 * s + sgn(m - 1) / 2.0 * std::log(q) / ipow(1.0 - q, m + 1);
      },
      "q = alpha^r; r = 0 excluded (q = 1)");

  add_pair(
      out, "S4.LF2", "theorem (q = 5F_r^2/L_r^2, L_n^2 = 5F_n^2 + 4(-1)^n)",
      {p_any("m", 0, 4), p_any("r", 1, 8)},
      [](const Params& p) {
        const double l2 = L(p.r) * L(p.r), f2 = 5.0 * F(p.r) * F(p.r);
        return Coeffs{l2, f2, f2, l2};
      },
      [](const Params& p) {
        const long r = p.r, m = p.m;
        const double f = F(r), l = L(r);
        double s = 0.0;
        for (long j = 1; j <= m; ++j) {
          s += sgn(r + (r + 1) * (m - j)) / j * ipow(4.0 / (5.0 * f * f), j);
        }
        s += sgn((r + 1) * (m + 1)) * std::log(5.0 * f * f / (l * l));
        return s / std::ldexp(1.0, static_cast<int>(2 * m + 3));
      },
      "erratum: the printed sum ratio (4/(5F_r))^j is read as (4/(5F_r^2))^j");

  add_pair(
      out, "S4.EVEN4", "theorem (q = 4/L_r^2, r even)", {p_any("m", 0, 4), p_even("r", 2, 10)},
      [](const Params& p) {
        const double l2 = L(p.r) * L(p.r);
        return Coeffs{l2, 4.0, 4.0, l2};
      },
      [](const Params& p) {
        const long m = p.m;
        const double f2 = 5.0 * F(p.r) * F(p.r), l = L(p.r);
        double s = 0.0;
        for (long j = 1; j <= m; ++j) s += sgn(m - j) / j * ipow(f2 / 4.0, j);
        s += sgn(m - 1) * std::log(4.0 / (l * l));
        return s / (2.0 * ipow(f2, m + 1));
      });

  add_pair(
      out, "S4.ODD4", "theorem (q = 4/(5F_r^2), r odd)", {p_any("m", 0, 4), p_odd("r", 1, 9)},
      [](const Params& p) {
        const double f2 = 5.0 * F(p.r) * F(p.r);
        return Coeffs{f2, 4.0, 4.0, f2};
      },
      [](const Params& p) {
        const long m = p.m;
        const double f2 = 5.0 * F(p.r) * F(p.r), l2 = L(p.r) * L(p.r);
        double s = 0.0;
        for (long j = 1; j <= m; ++j) s += sgn(m - j) / j * ipow(l2 / 4.0, j);
        s += sgn(m - 1) * std::log(4.0 / f2);
        return s / (2.0 * ipow(l2, m + 1));
      });

  add_pair(
      out, "S4.F4R1", "theorem (q = F_{4r+1}, F_{4n+1} - 1 = F_{2n} L_{2n+1})",
      {p_any("m", 0, 4), p_any("r", 1, 5)},
      [](const Params& p) {
        const double q = F(4 * p.r + 1);
        return Coeffs{1.0, q, q, 1.0};
      },
      [](const Params& p) {
        const long r = p.r, m = p.m;
        const double d = F(2 * r) * L(2 * r + 1), q = F(4 * r + 1);
        double s = 0.0;
        for (long j = 1; j <= m; ++j) s += ipow(d / q, j) / j;
        return (std::log(q) - s) / (2.0 * ipow(d, m + 1));
      });
}

// 2 Cl2(2 atan q) + 2 Cl2(pi - 2 atan q) + 4 atan q ln q
double cl66_rhs(double q) {
  const double a = std::atan(q);
  return 2.0 * cl(2.0 * a) + 2.0 * cl(pi - 2.0 * a) + 4.0 * a * std::log(q);
}

// ln((c + sin x)/(c - sin x)) given c and c - 1; 1 - sin x = 2 sin^2(pi/4 - x/2)
// keeps the denominator accurate near x = pi/2.
Integrand log_ratio_sin(double c, double c_minus_1) {
  return plain([=](double x) {
    const double h = std::sin(pi / 4.0 - x / 2.0);
    return std::log((c + std::sin(x)) / (c_minus_1 + 2.0 * h * h));
  });
}

// int_0^{pi/2} sin x / (a + b sin^2 x) dx
Integrand sin_ratio(double a, double b) {
  return plain([a, b](double x) {
    const double s = std::sin(x);
    return s / (a + b * s * s);
  });
}

void add_section5(Cases& out) {
  const Strategy quarter = finite(0.0, pi / 2.0);

  out.push_back(make(
      "S5.CL66RLS",
      "eq. (cl66rls) int_0^{pi/2} ln((c + sin x)/(c - sin x)) dx, c = (1 + q^2)/(2q)", quarter,
      {p_any("r", 0, 6)},
      [](const Params& p) {
        const double q = apow(-p.r);
        return log_ratio_sin((1.0 + q * q) / (2.0 * q), (1.0 - q) * (1.0 - q) / (2.0 * q));
      },
      [](const Params& p) { return cl66_rhs(apow(-p.r)); }, "q = (-beta)^r"));

  out.push_back(make(
      "S5.J7HZXMA.E", "theorem (thm.j7hzxma) r even: int_0^{pi/2} ln((L_r + 2 sin x)/(L_r - 2 sin x)) dx",
      quarter, {p_even("r", 2, 10)},
      [](const Params& p) { return log_ratio_sin(L(p.r) / 2.0, (L(p.r) - 2.0) / 2.0); },
      [](const Params& p) {
        const double th = std::atan(2.0 / (F(p.r) * s5()));
        return 2.0 * cl(th) + 2.0 * cl(pi - th) - 2.0 * p.r * th * lna();
      }));

  out.push_back(make(
      "S5.J7HZXMA.O",
      "theorem (thm.j7hzxma) r odd: int_0^{pi/2} ln((F_r sqrt5 + 2 sin x)/(F_r sqrt5 - 2 sin x)) dx",
      quarter, {p_odd("r", 1, 9)},
      [](const Params& p) {
        const double f5 = F(p.r) * s5();
        return log_ratio_sin(f5 / 2.0, (f5 - 2.0) / 2.0);
      },
      [](const Params& p) {
        const double th = std::atan(2.0 / L(p.r));
        return 2.0 * cl(th) + 2.0 * cl(pi - th) - 2.0 * p.r * th * lna();
      }));

  out.push_back(make(
      "S5.FOURG", "particular case int_0^{pi/2} ln((1 + sin x)/(1 - sin x)) dx = 4G", quarter, {},
      [](const Params&) { return log_ratio_sin(1.0, 0.0); }, [](const Params&) { return 4.0 * catalan(); }));

  out.push_back(make(
      "S5.TKZY7WR", "eq. (tkzy7wr) int_0^{pi/2} sin x / (sin^2 x + Q^2) dx", quarter,
      {p_any("r", -4, 4)},
      [](const Params& p) {
        const double q = apow(p.r);
        return sin_ratio(q * q, 1.0);
      },
      [](const Params& p) {
        const double q = apow(p.r);
        const double w = std::sqrt(1.0 + q * q);
        return std::log((1.0 - q + w) / (1.0 + q - w)) / w;
      },
      "Q = alpha^r"));

  out.push_back(make(
      "S5.SIN1", "eq. (Fib_sin_id1) int_0^{pi/2} sin x / (5F_r^2 + L_r^2 sin^2 x) dx", quarter,
      {p_any("r", 1, 10)},
      [](const Params& p) { return sin_ratio(5.0 * F(p.r) * F(p.r), L(p.r) * L(p.r)); },
      [](const Params& p) {
        const double r2 = std::sqrt(2.0), w = std::sqrt(L(2 * p.r));
        return r2 / (2.0 * L(p.r) * w) * std::log((r2 * bpow(p.r) + w) / (r2 * apow(p.r) - w));
      }));

  out.push_back(make(
      "S5.SIN2", "eq. (Fib_sin_id2) int_0^{pi/2} sin x / (L_r^2 + 5F_r^2 sin^2 x) dx", quarter,
      {p_any("r", 1, 10)},
      [](const Params& p) { return sin_ratio(L(p.r) * L(p.r), 5.0 * F(p.r) * F(p.r)); },
      [](const Params& p) {
        const double r2 = std::sqrt(2.0), w = std::sqrt(L(2 * p.r));
        return std::sqrt(10.0) / (10.0 * F(p.r) * w) *
               std::log((-r2 * bpow(p.r) + w) / (r2 * apow(p.r) - w));
      }));

  out.push_back(make(
      "S5.SIN3", "eq. (Fib_sin_id3) int_0^{pi/2} sin x / (F_{r-1}^2 + F_r^2 sin^2 x) dx", quarter,
      {p_any("r", 2, 10)},
      [](const Params& p) { return sin_ratio(F(p.r - 1) * F(p.r - 1), F(p.r) * F(p.r)); },
      [](const Params& p) {
        const double w = std::sqrt(F(2 * p.r - 1));
        return std::log((F(p.r - 2) + w) / (F(p.r + 1) - w)) / (F(p.r) * w);
      }));

  out.push_back(make(
      "S5.SIN4", "eq. (Fib_sin_id4) int_0^{pi/2} sin x / (L_{r-1}^2 + L_r^2 sin^2 x) dx", quarter,
      {p_any("r", 1, 10)},
      [](const Params& p) { return sin_ratio(L(p.r - 1) * L(p.r - 1), L(p.r) * L(p.r)); },
      [](const Params& p) {
        const double w = std::sqrt(5.0 * F(2 * p.r - 1));
        return std::log((L(p.r - 2) + w) / (L(p.r + 1) - w)) / (L(p.r) * w);
      }));

  out.push_back(make(
      "S5.SIN5GEN", "eq. (Fib_sin_id5_gen) int_0^{pi/2} sin x / (F_k^2 + F_{k+r}^2 sin^2 x) dx",
      quarter, {p_any("k", 1, 4), p_odd("r", 1, 5)},
      [](const Params& p) {
        const double fk = F(p.k), fkr = F(p.k + p.r);
        return sin_ratio(fk * fk, fkr * fkr);
      },
      [](const Params& p) {
        const double fk = F(p.k), fkr = F(p.k + p.r);
        const double w = std::sqrt(F(p.r) * F(2 * p.k + p.r));
        return std::log((fkr - fk + w) / (fkr + fk - w)) / (fkr * w);
      }));

  out.push_back(make(
      "S5.SIN6", "eq. (Fib_sin_id6) int_0^{pi/2} sin x / (4 + L_r^2 sin^2 x) dx", quarter,
      {p_odd("r", 1, 9)}, [](const Params& p) { return sin_ratio(4.0, L(p.r) * L(p.r)); },
      [](const Params& p) { return p.r * lna() / (s5() * F(2 * p.r)); }));

  out.push_back(make(
      "S5.SIN7", "corollary (Fib_sin_id7) int_0^{pi/2} sin^3 x / (4 + L_r^2 sin^2 x)^2 dx", quarter,
      {p_odd("r", 1, 9)},
      [](const Params& p) {
        const double l2 = L(p.r) * L(p.r);
        return plain([l2](double x) {
          const double s = std::sin(x);
          const double d = 4.0 + l2 * s * s;
          return s * s * s / (d * d);
        });
      },
      [](const Params& p) {
        const double f2r = F(2 * p.r);
        return (2.0 * p.r * L(2 * p.r) / (s5() * f2r) * lna() - 1.0) / (10.0 * f2r * f2r);
      }));
}

}  // namespace

void add_s4_s5(Cases& out) {
  add_section4(out);
  add_section5(out);
}

}  // namespace fibint::cat
