#include "catalog.hpp"

namespace fibint::cat {

namespace {

void add_stewart_dilcher(Cases& out) {
  out.push_back(make(
      "S1.STEWART", "eq. (1) int_{-1}^1 (L_k + F_k x sqrt5)^{n-1} dx = 2^n F_{kn} / (n F_k)",
      finite(-1.0, 1.0), {p_any("k", 1, 5), p_any("n", 1, 8)},
      [](const Params& p) {
        const double lk = L(p.k), fk = F(p.k) * s5();
        const long e = p.n - 1;
        return plain([=](double x) { return ipow(lk + fk * x, e); });
      },
      [](const Params& p) {
        return std::ldexp(1.0, static_cast<int>(p.n)) * F(p.k * p.n) / (p.n * F(p.k));
      }));

  out.push_back(make(
      "S1.DILCHER",
      "eq. (3) int_0^pi (1 + sqrt5/3 cos x)^{n-1} sin x dx = (2/n) (2/3)^{n-1} F_{2n}",
      finite(0.0, pi), {p_any("n", 1, 8)},
      [](const Params& p) {
        const double c = s5() / 3.0;
        const long e = p.n - 1;
        return plain([=](double x) { return ipow(1.0 + c * std::cos(x), e) * std::sin(x); });
      },
      [](const Params& p) { return 2.0 / p.n * ipow(2.0 / 3.0, p.n - 1) * F(2 * p.n); }));

  auto stewart_base = [](const Params& p) {
    const double lk = L(p.k), fk = F(p.k) * s5();
    return [=, e = p.n - 2](double x) { return ipow(lk + fk * x, e); };
  };

  out.push_back(make(
      "S2.BJU5530",
      "eq. (bju5530) int_{-1}^1 (L_k + F_k x sqrt5)^{n-2} (F_k sqrt5 + L_k x) dx",
      finite(-1.0, 1.0), {p_any("k", 1, 5), p_any("n", 2, 8)},
      [=](const Params& p) {
        const auto base = stewart_base(p);
        const double fk = F(p.k) * s5(), lk = L(p.k);
        return plain([=](double x) { return base(x) * (fk + lk * x); });
      },
      [](const Params& p) {
        const double fk = F(p.k), lk = L(p.k), n = static_cast<double>(p.n);
        return std::ldexp(1.0, static_cast<int>(p.n)) / ((n - 1.0) * s5()) *
               (L(p.k * p.n) / fk - F(p.k * p.n) * lk / (n * fk * fk));
      }));

  out.push_back(make(
      "S2.XSN0TMC", "eq. (xsn0tmc) int_{-1}^1 (L_k + F_k x sqrt5)^{n-2} (1 - x) dx",
      finite(-1.0, 1.0), {p_any("k", 1, 5), p_any("n", 2, 8)},
      [=](const Params& p) {
        const auto base = stewart_base(p);
        return plain([=](double x) { return base(x) * (1.0 - x); });
      },
      [](const Params& p) {
        const double fk = F(p.k), n = static_cast<double>(p.n);
        return std::ldexp(1.0, static_cast<int>(p.n)) / ((n - 1.0) * fk * s5()) *
               (-bpow((p.n - 1) * p.k) + F(p.n * p.k) / (n * fk));
      }));

  out.push_back(make(
      "S2.COMPL2", "eq. (stewart_compl2) int_{-1}^1 (L_k + F_k x sqrt5)^{n-2} x dx",
      finite(-1.0, 1.0), {p_any("k", 1, 5), p_any("n", 2, 8)},
      [=](const Params& p) {
        const auto base = stewart_base(p);
        return plain([=](double x) { return base(x) * x; });
      },
      [](const Params& p) {
        const double fk = F(p.k), n = static_cast<double>(p.n);
        return std::ldexp(1.0, static_cast<int>(p.n)) / ((n - 1.0) * s5() * fk) *
               (L((p.n - 1) * p.k) / 2.0 - F(p.n * p.k) / (n * fk));
      }));

  out.push_back(make(
      "S2.DJFHEP4",
      "eq. (djfhep4) int_0^pi (1 + sqrt5/3 cos x)^{n-1} ln(1 + sqrt5/3 cos x) sin x dx",
      finite(0.0, pi), {p_any("n", 1, 8)},
      [](const Params& p) {
        const double c = s5() / 3.0;
        const long e = p.n - 1;
        return plain([=](double x) {
          const double u = 1.0 + c * std::cos(x);
          return ipow(u, e) * std::log(u) * std::sin(x);
        });
      },
      [](const Params& p) {
        const double n = static_cast<double>(p.n);
        const double w = ipow(2.0 / 3.0, p.n);
        return 6.0 / (n * s5()) * w * L(2 * p.n) * lna() +
               (-1.0 / n + std::log(2.0 / 3.0)) * w * 3.0 / n * F(2 * p.n);
      },
      "implements the theorem form of section 2; the introduction display is a duplicate"));
}

// 1 + L_{2r} t^2 + t^4
auto quartic(long r) {
  const double l2r = L(2 * r);
  return [l2r](double t) { return 1.0 + l2r * t * t + t * t * t * t; };
}

// F_r sqrt5 for odd r, L_r for even r.
double fl_by_parity(long r) { return r % 2 != 0 ? F(r) * s5() : L(r); }

void add_tan_log(Cases& out) {
  out.push_back(make(
      "S3.M6BI7TA", "eq. (m6bi7ta) int_0^{pi/2} ln(1 + L_{2r} tan^2 x + tan^4 x) dx",
      tan_halfpi(), {p_any("r", 1, 10)},
      [](const Params& p) {
        const auto qf = quartic(p.r);
        return plain([=](double t) { return std::log(qf(t)); });
      },
      [](const Params& p) { return pi * std::log(fl_by_parity(p.r) + 2.0); }));

  out.push_back(make(
      "S3.K2XKUE3",
      "eq. (k2xkue3) int_0^{pi/2} ln((1 + alpha^{2r} tan^2 x)^2 / (1 + L_{2r} tan^2 x + tan^4 x)) dx",
      tan_halfpi(), {p_any("r", 1, 10)},
      [](const Params& p) {
        const double a2r = apow(2 * p.r);
        const auto qf = quartic(p.r);
        return plain([=](double t) { return 2.0 * std::log1p(a2r * t * t) - std::log(qf(t)); });
      },
      [](const Params& p) {
        if (p.r % 2 != 0) return pi * p.r * lna();
        const double ar = apow(p.r);
        return pi * std::log((1.0 + ar) * (1.0 + ar) / (L(p.r) + 2.0));
      },
      "ambiguous: both branches are labelled odd; first branch used for odd r, second for "
      "even r. Erratum: the printed numerator (1 + alpha^{2r} + tan^2 x)^2 is read as "
      "(1 + alpha^{2r} tan^2 x)^2"));

  out.push_back(make(
      "S3.TAN2", "corollary (cor_tan_id) int_0^{pi/2} tan^2 x / (1 + L_{2r} tan^2 x + tan^4 x) dx",
      tan_halfpi(), {p_any("r", 1, 10)},
      [](const Params& p) {
        const auto qf = quartic(p.r);
        return plain([=](double t) { return t * t / qf(t); });
      },
      [](const Params& p) {
        const double u = fl_by_parity(p.r);
        return pi / 2.0 / (u * (u + 2.0));
      }));

  out.push_back(make(
      "S3.RECIP", "corollary after eq. (t2k7wzu) int_0^{pi/2} dx / (1 + L_{2r} tan^2 x + tan^4 x)",
      tan_halfpi(), {p_any("r", 1, 10)},
      [](const Params& p) {
        const auto qf = quartic(p.r);
        return plain([=](double t) { return 1.0 / qf(t); });
      },
      [](const Params& p) {
        const double u = fl_by_parity(p.r);
        const double l2r = L(2 * p.r);
        return pi / 2.0 / (l2r * (u + 2.0)) * (l2r + u - 2.0 / u);
      }));
}

// sum_{k=0}^{floor(n/2)} C(n,2k) (-1)^k / (2k+1) (c t^2)^k
double odd_binomial_sum(long n, double ct2) {
  double s = 0.0;
  double pw = 1.0;
  for (long k = 0; 2 * k <= n; ++k) {
    s += binom(n, 2 * k) * (k % 2 == 0 ? 1.0 : -1.0) / (2.0 * k + 1.0) * pw;
    pw *= ct2;
  }
  return s;
}

double rok_q(long r) {
  const long a = std::abs(r);
  const double ratio = F(a + 1) / F(a);
  return r > 0 ? ratio : 1.0 / ratio;
}

void add_tan_powers(Cases& out) {
  out.push_back(make(
      "S3.ROKBVU0",
      "eq. (rokbvu0) int_0^{pi/2} (q^2 + tan^2 x)^{-(n+1)} sum_k C(n,2k) (-1)^k/(2k+1) "
      "(tan x / q)^{2k} dx",
      tan_halfpi(), {p_any("n", 0, 4), p_any("r", -6, 6, {0})},
      [](const Params& p) {
        const double q = rok_q(p.r);
        const long n = p.n;
        return plain([=](double t) {
          return odd_binomial_sum(n, t * t / (q * q)) / ipow(q * q + t * t, n + 1);
        });
      },
      [](const Params& p) {
        const double q = rok_q(p.r);
        const double n1 = static_cast<double>(p.n + 1);
        return pi / 2.0 / n1 * (1.0 / ipow(q, 2 * p.n + 1) - q / ipow(q * (q + 1.0), p.n + 1));
      },
      "q = (F_{|r|+1}/F_{|r|})^{sign r}"));

  out.push_back(make(
      "S3.LFPAIR.A",
      "theorem (q = L_r/(F_r sqrt5)) int_0^{pi/2} (L_r^2 + 5F_r^2 tan^2 x)^{-(n+1)} sum_k ... dx",
      tan_halfpi(), {p_any("n", 0, 3), p_any("r", 1, 8)},
      [](const Params& p) {
        const double l = L(p.r), f5 = F(p.r) * s5();
        const long n = p.n;
        return plain([=](double t) {
          return odd_binomial_sum(n, f5 * f5 / (l * l) * t * t) /
                 ipow(l * l + f5 * f5 * t * t, n + 1);
        });
      },
      [](const Params& p) {
        const double l = L(p.r), f5 = F(p.r) * s5();
        const double n1 = static_cast<double>(p.n + 1);
        return pi / 2.0 / n1 / (ipow(l, p.n) * f5) *
               (1.0 / ipow(l, p.n + 1) - 1.0 / ipow(2.0 * apow(p.r), p.n + 1));
      }));

  out.push_back(make(
      "S3.LFPAIR.B",
      "theorem (q = F_r sqrt5/L_r) int_0^{pi/2} (5F_r^2 + L_r^2 tan^2 x)^{-(n+1)} sum_k ... dx",
      tan_halfpi(), {p_any("n", 0, 3), p_any("r", 1, 8)},
      [](const Params& p) {
        const double l = L(p.r), f5 = F(p.r) * s5();
        const long n = p.n;
        return plain([=](double t) {
          return odd_binomial_sum(n, l * l / (f5 * f5) * t * t) /
                 ipow(f5 * f5 + l * l * t * t, n + 1);
        });
      },
      [](const Params& p) {
        const double l = L(p.r), f5 = F(p.r) * s5();
        const double n1 = static_cast<double>(p.n + 1);
        return pi / 2.0 / n1 / (ipow(f5, p.n) * l) *
               (1.0 / ipow(f5, p.n + 1) - 1.0 / ipow(2.0 * apow(p.r), p.n + 1));
      }));

  out.push_back(make(
      "S3.SPECIAL1", "special case int_0^{pi/2} dx / (L_r^2 + 5F_r^2 tan^2 x)^2", tan_halfpi(),
      {p_any("r", 1, 8)},
      [](const Params& p) {
        const double l2 = L(p.r) * L(p.r), f2 = 5.0 * F(p.r) * F(p.r);
        return plain([=](double t) {
          const double d = l2 + f2 * t * t;
          return 1.0 / (d * d);
        });
      },
      [](const Params& p) {
        const double l = L(p.r);
        return pi / 4.0 / (F(2 * p.r) * s5()) * (1.0 / (l * l) - 1.0 / (4.0 * apow(2 * p.r)));
      }));

  out.push_back(make(
      "S3.SPECIAL2", "special case int_0^{pi/2} dx / (5F_r^2 + L_r^2 tan^2 x)^2", tan_halfpi(),
      {p_any("r", 1, 8)},
      [](const Params& p) {
        const double l2 = L(p.r) * L(p.r), f2 = 5.0 * F(p.r) * F(p.r);
        return plain([=](double t) {
          const double d = f2 + l2 * t * t;
          return 1.0 / (d * d);
        });
      },
      [](const Params& p) {
        const double f = F(p.r);
        return pi / 4.0 / (F(2 * p.r) * s5()) *
               (1.0 / (5.0 * f * f) - 1.0 / (4.0 * apow(2 * p.r)));
      }));

  out.push_back(make(
      "S3.SPECIAL1.PART", "special value int_0^{pi/2} dx / (1 + 5 tan^2 x)^2 = pi alpha / 16",
      tan_halfpi(), {},
      [](const Params&) {
        return plain([](double t) {
          const double d = 1.0 + 5.0 * t * t;
          return 1.0 / (d * d);
        });
      },
      [](const Params&) { return pi * alpha() / 16.0; }));

  out.push_back(make(
      "S3.SPECIAL2.PART",
      "special value int_0^{pi/2} dx / (5 + tan^2 x)^2 = (pi/400)(2 + 7/alpha^2)", tan_halfpi(),
      {},
      [](const Params&) {
        return plain([](double t) {
          const double d = 5.0 + t * t;
          return 1.0 / (d * d);
        });
      },
      [](const Params&) { return pi / 400.0 * (2.0 + 7.0 / (alpha() * alpha())); }));
}

double quartic_lf_sum(long n, long r, double t, bool lucas) {
  const double t2 = t * t;
  double outer = 0.0;
  double t2k = 1.0;
  for (long k = 0; 2 * k <= n; ++k) {
    double inner = 0.0;
    double t2j = 1.0;
    for (long j = 0; j <= n + 1; ++j) {
      const long idx = 2 * n + 2 * k - 2 * j + r + 2;
      inner += binom(n + 1, j) * t2j * (lucas ? L(idx) : F(idx));
      t2j *= t2;
    }
    outer += binom(n, 2 * k) * (k % 2 == 0 ? 1.0 : -1.0) * t2k / (2.0 * k + 1.0) * inner;
    t2k *= t2;
  }
  return outer;
}

void add_tan_quartic(Cases& out) {
  for (bool lucas : {true, false}) {
    out.push_back(make(
        lucas ? "S3.QUARTIC.L" : "S3.QUARTIC.F",
        lucas ? "theorem (q = alpha, q = -beta) int_0^{pi/2} (1 + 3tan^2 x + tan^4 x)^{-(n+1)} "
                "sum_k sum_j ... L_{2n+2k-2j+r+2} dx"
              : "theorem (q = alpha, q = -beta) int_0^{pi/2} (1 + 3tan^2 x + tan^4 x)^{-(n+1)} "
                "sum_k sum_j ... F_{2n+2k-2j+r+2} dx",
        tan_halfpi(), {p_any("n", 0, 3), p_any("r", -3, 6)},
        [lucas](const Params& p) {
          const long n = p.n, r = p.r;
          return plain([=](double t) {
            return quartic_lf_sum(n, r, t, lucas) / ipow(1.0 + 3.0 * t * t + t * t * t * t, n + 1);
          });
        },
        [lucas](const Params& p) {
          const long n = p.n, r = p.r;
          const double n1 = static_cast<double>(n + 1);
          const double sgn = n % 2 == 0 ? 1.0 : -1.0;
          if (lucas) {
            return pi / 2.0 / n1 * (F(2 * n + r + 1) * s5() - apow(r - 1) - sgn * bpow(3 * n + r + 2));
          }
          return pi / (2.0 * s5()) / n1 * (L(2 * n + r + 1) - apow(r - 1) + sgn * bpow(3 * n + r + 2));
        }));
  }

  auto quartic3 = [](double t) { return 1.0 + 3.0 * t * t + t * t * t * t; };
  out.push_back(make(
      "S3.QUARTIC.PARTS.1",
      "special value int_0^{pi/2} (1 - tan^2 x)/(1 + 3tan^2 x + tan^4 x) dx = -pi beta^3/2",
      tan_halfpi(), {},
      [=](const Params&) { return plain([=](double t) { return (1.0 - t * t) / quartic3(t); }); },
      [](const Params&) { return -pi * bpow(3) / 2.0; }));
  out.push_back(make(
      "S3.QUARTIC.PARTS.2",
      "special value int_0^{pi/2} dx/(1 + 3tan^2 x + tan^4 x) = pi beta^2/sqrt5", tan_halfpi(), {},
      [=](const Params&) { return plain([=](double t) { return 1.0 / quartic3(t); }); },
      [](const Params&) { return pi * bpow(2) / s5(); }));
  out.push_back(make(
      "S3.QUARTIC.PARTS.3",
      "special value int_0^{pi/2} tan^2 x/(1 + 3tan^2 x + tan^4 x) dx = -pi beta^3/(2 sqrt5)",
      tan_halfpi(), {},
      [=](const Params&) { return plain([=](double t) { return t * t / quartic3(t); }); },
      [](const Params&) { return -pi * bpow(3) / (2.0 * s5()); }));
}

}  // namespace

void add_s1_s3(Cases& out) {
  add_stewart_dilcher(out);
  add_tan_log(out);
  add_tan_powers(out);
  add_tan_quartic(out);
}

}  // namespace fibint::cat
