#include "catalog.hpp"

namespace fibint::cat {

namespace {

using Fn = std::function<double(double)>;

// x^2 w(x) / d(x)^p
Integrand x2_ratio(Fn w, Fn d, int p) {
  return plain([=](double x) {
    const double v = d(x);
    return x * x * w(x) / (p == 1 ? v : v * v);
  });
}

Fn one() {
  return [](double) { return 1.0; };
}

Fn cos2x() {
  return [](double x) { return std::cos(2.0 * x); };
}

// a + b cos^2 x
Fn cos_sq(double a, double b) {
  return [=](double x) {
    const double c = std::cos(x);
    return a + b * c * c;
  };
}

// a + b sin^2 x
Fn sin_sq(double a, double b) {
  return [=](double x) {
    const double s = std::sin(x);
    return a + b * s * s;
  };
}

// a + b cos 2x
Fn lin_cos2(double a, double b) {
  return [=](double x) { return a + b * std::cos(2.0 * x); };
}

// a + b cos^2 2x
Fn cos2_sq(double a, double b) {
  return [=](double x) {
    const double c = std::cos(2.0 * x);
    return a + b * c * c;
  };
}

// a + b sin^2 2x
Fn sin2_sq(double a, double b) {
  return [=](double x) {
    const double s = std::sin(2.0 * x);
    return a + b * s * s;
  };
}

double pi3() { return pi * pi * pi; }
double ln2a() { return lna() * lna(); }
double sq(double v) { return v * v; }
double cube(double v) { return v * v * v; }

// Li2(beta^r) - Li2(-beta^r)
double li2_diff(long r) { return li2(bpow(r)) - li2(-bpow(r)); }

void add_section8(Cases& out) {
  const Strategy full = finite(0.0, pi);

  auto aek_rhs = [](const Params& p) {
    return (pi3() / 3.0 + pi * li2(bpow(2 * p.r))) / (F(2 * p.r) * s5());
  };
  out.push_back(make(
      "S8.AEKFMPM.E", "eq. (aekfmpm) r even: int_0^pi x^2 / (L_r^2 - 4 cos^2 x) dx", full,
      {p_even("r", 2, 10)},
      [](const Params& p) { return x2_ratio(one(), cos_sq(sq(L(p.r)), -4.0), 1); }, aek_rhs));
  out.push_back(make(
      "S8.AEKFMPM.O", "eq. (aekfmpm) r odd: int_0^pi x^2 / (L_r^2 + 4 sin^2 x) dx", full,
      {p_odd("r", 1, 9)},
      [](const Params& p) { return x2_ratio(one(), sin_sq(sq(L(p.r)), 4.0), 1); }, aek_rhs));
  out.push_back(make(
      "S8.AEKFMPM.PART", "particular case int_0^pi x^2 / (1 + 4 sin^2 x) dx", full, {},
      [](const Params&) { return x2_ratio(one(), sin_sq(1.0, 4.0), 1); },
      [](const Params&) { return 2.0 * pi3() / (5.0 * s5()) - pi * ln2a() / s5(); }));

  auto m86_head = [](long r) {
    const double f2r = F(2 * r);
    return pi3() * s5() / 75.0 * L(2 * r) / cube(f2r) +
           pi * s5() / 25.0 * L(2 * r) / cube(f2r) * li2(bpow(2 * r));
  };
  out.push_back(make(
      "S8.M86SKX9.E", "corollary (cor.m86skx9) r even: int_0^pi x^2 / (L_r^2 - 4 cos^2 x)^2 dx",
      full, {p_even("r", 2, 10)},
      [](const Params& p) { return x2_ratio(one(), cos_sq(sq(L(p.r)), -4.0), 2); },
      [=](const Params& p) {
        return m86_head(p.r) - pi / (5.0 * sq(F(2 * p.r))) * std::log(bpow(p.r) * F(p.r) * s5());
      }));
  out.push_back(make(
      "S8.M86SKX9.O", "corollary (cor.m86skx9) r odd: int_0^pi x^2 / (L_r^2 + 4 sin^2 x)^2 dx",
      full, {p_odd("r", 1, 9)},
      [](const Params& p) { return x2_ratio(one(), sin_sq(sq(L(p.r)), 4.0), 2); },
      [=](const Params& p) {
        return m86_head(p.r) - pi / (5.0 * sq(F(2 * p.r))) * std::log(-bpow(p.r) * L(p.r));
      }));
  out.push_back(make(
      "S8.M86SKX9.PART", "particular case int_0^pi x^2 / (1 + 4 sin^2 x)^2 dx", full, {},
      [](const Params&) { return x2_ratio(one(), sin_sq(1.0, 4.0), 2); },
      [](const Params&) {
        return 6.0 * pi3() * s5() / 125.0 - 3.0 * pi * s5() / 25.0 * ln2a() + pi / 5.0 * lna();
      }));

  // L_r^2 - 4(-1)^r cos^2 x
  auto wbnq_den = [](long r) { return cos_sq(sq(L(r)), r % 2 == 0 ? -4.0 : 4.0); };
  auto signed_b2r = [](long r) { return (r % 2 == 0 ? 1.0 : -1.0) * bpow(2 * r); };

  out.push_back(make(
      "S8.WBNQDEF", "eq. (wbnqdef) int_0^pi x^2 / (L_r^2 - 4(-1)^r cos^2 x) dx", full,
      {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(one(), wbnq_den(p.r), 1); },
      [=](const Params& p) {
        return (pi3() / 3.0 + pi * li2(signed_b2r(p.r))) / (F(2 * p.r) * s5());
      }));

  out.push_back(make(
      "S8.WBNQ.SQ", "corollary int_0^pi x^2 / (L_r^2 - 4(-1)^r cos^2 x)^2 dx", full,
      {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(one(), wbnq_den(p.r), 2); },
      [=](const Params& p) {
        const double f2r = F(2 * p.r), l2r = L(2 * p.r), s = signed_b2r(p.r);
        return pi3() * s5() / 75.0 * l2r / cube(f2r) + pi * s5() / 25.0 * l2r / cube(f2r) * li2(s) -
               pi / (5.0 * sq(f2r)) * std::log1p(-s);
      }));

  out.push_back(make(
      "S8.EF4NKHY", "eq. (ef4nkhy) int_0^pi x^2 cos^2 x / (L_r^2 - 4(-1)^r cos^2 x)^2 dx", full,
      {p_any("r", 1, 10)},
      [=](const Params& p) { return x2_ratio(cos_sq(0.0, 1.0), wbnq_den(p.r), 2); },
      [=](const Params& p) {
        const long r = p.r;
        const double fr = F(r), f2r = F(2 * r), s = signed_b2r(r);
        const double sgn = r % 2 == 0 ? 1.0 : -1.0;
        return (-pi / (10.0 * fr * f2r * bpow(r)) + pi * s5() / 20.0 * sgn / f2r) * std::log1p(-s) +
               pi3() * s5() / (150.0 * f2r * sq(fr)) + pi * s5() / (50.0 * f2r * sq(fr)) * li2(s);
      }));

  out.push_back(make(
      "S8.REMARK", "remark int_0^pi x^2 cos^2 x / (1 - Q cos^2 x)^2 dx, Q = 4q/(1+q)^2", full,
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = bpow(p.r);
        const double Q = 4.0 * q / sq(1.0 + q);
        return x2_ratio(cos_sq(0.0, 1.0), cos_sq(1.0, -Q), 2);
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        return -pi / 4.0 * ipow(1.0 + q, 4) / sq(1.0 - q) * std::log1p(-q) / q +
               0.5 * cube((1.0 + q) / (1.0 - q)) * (pi3() / 3.0 + pi * li2(q));
      },
      "q = beta^r"));
}

void add_lewin_nine(Cases& out) {
  const Strategy full = finite(0.0, pi);

  // pi^3/3 + pi Li2(s beta^r) = F_r sqrt5 int x^2/(L_r - 2s cos 2x) (r even)
  //                           = L_r int x^2/(F_r sqrt5 + 2s cos 2x) (r odd)
  for (int s : {1, -1}) {
    const char* tag = s > 0 ? "P" : "M";
    out.push_back(make(
        std::string("S9.G8UGNY7.") + tag + "E",
        s > 0 ? "eq. (g8ugny7) upper sign, r even: int_0^pi x^2 / (L_r - 2 cos 2x) dx"
              : "eq. (g8ugny7) lower sign, r even: int_0^pi x^2 / (L_r + 2 cos 2x) dx",
        full, {p_even("r", 2, 10)},
        [s](const Params& p) { return x2_ratio(one(), lin_cos2(L(p.r), -2.0 * s), 1); },
        [s](const Params& p) {
          return (pi3() / 3.0 + pi * li2(s * bpow(p.r))) / (F(p.r) * s5());
        }));
    out.push_back(make(
        std::string("S9.G8UGNY7.") + tag + "O",
        s > 0 ? "eq. (g8ugny7) upper sign, r odd: int_0^pi x^2 / (F_r sqrt5 + 2 cos 2x) dx"
              : "eq. (g8ugny7) lower sign, r odd: int_0^pi x^2 / (F_r sqrt5 - 2 cos 2x) dx",
        full, {p_odd("r", 1, 9)},
        [s](const Params& p) { return x2_ratio(one(), lin_cos2(F(p.r) * s5(), 2.0 * s), 1); },
        [s](const Params& p) { return (pi3() / 3.0 + pi * li2(s * bpow(p.r))) / L(p.r); }));

    out.push_back(make(
        std::string("S9.KNIIJOY.") + tag,
        s > 0 ? "eq. (kniijoy) upper sign, r even: int_0^pi x^2 / (L_r - 2 cos 2x)^2 dx"
              : "eq. (kniijoy) lower sign, r even: int_0^pi x^2 / (L_r + 2 cos 2x)^2 dx",
        full, {p_even("r", 2, 10)},
        [s](const Params& p) { return x2_ratio(one(), lin_cos2(L(p.r), -2.0 * s), 2); },
        [s](const Params& p) {
          const double f = F(p.r), b = s * bpow(p.r);
          return -pi / (5.0 * f * f) * std::log1p(-b) +
                 L(p.r) / (5.0 * cube(f) * s5()) * (pi3() / 3.0 + pi * li2(b));
        }));

    out.push_back(make(
        std::string("S9.M64M49C.") + tag,
        s > 0 ? "eq. (m64m49c) upper sign, r odd: int_0^pi x^2 / (F_r sqrt5 + 2 cos 2x)^2 dx"
              : "eq. (m64m49c) lower sign, r odd: int_0^pi x^2 / (F_r sqrt5 - 2 cos 2x)^2 dx",
        full, {p_odd("r", 1, 9)},
        [s](const Params& p) { return x2_ratio(one(), lin_cos2(F(p.r) * s5(), 2.0 * s), 2); },
        [s](const Params& p) {
          const double l = L(p.r), b = s * bpow(p.r);
          return -pi / (l * l) * std::log1p(-b) +
                 F(p.r) * s5() / cube(l) * (pi3() / 3.0 + pi * li2(b));
        }));
  }

  struct Part {
    const char* id;
    const char* anchor;
    double a, b;
    int p;
    double (*rhs)();
  };
  const Part parts[] = {
      {"S9.G8UGNY7.PART1", "particular case int_0^pi x^2 / (sqrt5 + 2 cos 2x) dx", s5(), 2.0, 1,
       [] { return 4.0 * pi3() / 15.0 + pi / 2.0 * ln2a(); }},
      {"S9.G8UGNY7.PART2", "particular case int_0^pi x^2 / (sqrt5 - 2 cos 2x) dx", s5(), -2.0, 1,
       [] { return 13.0 * pi3() / 30.0 - pi * ln2a(); }},
      {"S9.G8UGNY7.PART3", "particular case int_0^pi x^2 / (3 - 2 cos 2x) dx", 3.0, -2.0, 1,
       [] { return (2.0 * pi3() / 5.0 - pi * ln2a()) / s5(); }},
      {"S9.KNIIJOY.PART1", "particular case int_0^pi x^2 / (3 - 2 cos 2x)^2 dx", 3.0, -2.0, 2,
       [] { return pi / 5.0 * lna() + 6.0 * pi3() / (25.0 * s5()) - 3.0 * pi / (5.0 * s5()) * ln2a(); }},
      {"S9.KNIIJOY.PART2", "particular case int_0^pi x^2 / (sqrt5 + 2 cos 2x)^2 dx", s5(), 2.0, 2,
       [] { return -pi * lna() + 4.0 * pi3() / (3.0 * s5()) + pi * s5() / 2.0 * ln2a(); }},
      {"S9.KNIIJOY.PART3", "particular case int_0^pi x^2 / (sqrt5 - 2 cos 2x)^2 dx", s5(), -2.0, 2,
       [] { return 2.0 * pi * lna() + 13.0 * pi3() / (6.0 * s5()) - pi * s5() * ln2a(); }},
  };
  for (const Part& pt : parts) {
    const double a = pt.a, b = pt.b;
    const int pw = pt.p;
    auto rhs = pt.rhs;
    out.push_back(make(
        pt.id, pt.anchor, full, {},
        [=](const Params&) { return x2_ratio(one(), lin_cos2(a, b), pw); },
        [=](const Params&) { return rhs(); }));
  }
}

void add_cos2_squares(Cases& out) {
  const Strategy full = finite(0.0, pi);

  out.push_back(make(
      "S9.FRLTBQE",
      "eq. (frltbqe) r even: int_0^pi (L_r^2 + 4 cos^2 2x) x^2 / (L_r^2 - 4 cos^2 2x)^2 dx", full,
      {p_even("r", 2, 10)},
      [](const Params& p) {
        const double l2 = sq(L(p.r));
        return x2_ratio(cos2_sq(l2, 4.0), cos2_sq(l2, -4.0), 2);
      },
      [](const Params& p) {
        const double f = F(p.r);
        return -pi / (10.0 * f * f) * std::log(bpow(p.r) * f * s5()) +
               L(p.r) / (20.0 * cube(f) * s5()) * (4.0 * pi3() / 3.0 + pi * li2(bpow(2 * p.r)));
      }));

  out.push_back(make(
      "S9.S7JKWMS", "eq. (s7jkwms) r even: int_0^pi x^2 cos 2x / (L_r^2 - 4 cos^2 2x)^2 dx", full,
      {p_even("r", 2, 10)},
      [](const Params& p) { return x2_ratio(cos2x(), cos2_sq(sq(L(p.r)), -4.0), 2); },
      [](const Params& p) {
        const double f = F(p.r), b = bpow(p.r);
        return pi / (40.0 * f * f * L(p.r)) * std::log((1.0 + b) / (1.0 - b)) +
               pi / (40.0 * cube(f) * s5()) * li2_diff(p.r);
      }));

  out.push_back(make(
      "S9.VXZM3GU",
      "eq. (vxzm3gu) r odd: int_0^pi (5F_r^2 + 4 cos^2 2x) x^2 / (5F_r^2 - 4 cos^2 2x)^2 dx", full,
      {p_odd("r", 1, 9)},
      [](const Params& p) {
        const double f2 = 5.0 * sq(F(p.r));
        return x2_ratio(cos2_sq(f2, 4.0), cos2_sq(f2, -4.0), 2);
      },
      [](const Params& p) {
        const double l = L(p.r);
        return -pi / (2.0 * l * l) * std::log(-bpow(p.r) * l) +
               F(p.r) * s5() / (4.0 * cube(l)) * (4.0 * pi3() / 3.0 + pi * li2(bpow(2 * p.r)));
      }));

  out.push_back(make(
      "S9.NT2NOAN", "eq. (nt2noan) r odd: int_0^pi x^2 cos 2x / (5F_r^2 - 4 cos^2 2x)^2 dx", full,
      {p_odd("r", 1, 9)},
      [](const Params& p) { return x2_ratio(cos2x(), cos2_sq(5.0 * sq(F(p.r)), -4.0), 2); },
      [](const Params& p) {
        const double l = L(p.r), b = bpow(p.r);
        return pi / (8.0 * l * l * F(p.r) * s5()) * std::log((1.0 - b) / (1.0 + b)) -
               pi / (8.0 * cube(l)) * li2_diff(p.r);
      }));

  out.push_back(make(
      "S9.NT2NOAN.PART1", "particular case int_0^pi (5 + 4 cos^2 2x) x^2 / (5 - 4 cos^2 2x)^2 dx",
      full, {}, [](const Params&) { return x2_ratio(cos2_sq(5.0, 4.0), cos2_sq(5.0, -4.0), 2); },
      [](const Params&) {
        return pi / 2.0 * lna() + 7.0 * pi3() / (4.0 * s5()) - pi * s5() / 4.0 * ln2a();
      }));

  out.push_back(make(
      "S9.NT2NOAN.PART2", "particular case int_0^pi x^2 cos 2x / (5 - 4 cos^2 2x)^2 dx", full, {},
      [](const Params&) { return x2_ratio(cos2x(), cos2_sq(5.0, -4.0), 2); },
      [](const Params&) {
        return 3.0 * pi / (8.0 * s5()) * lna() + pi3() / 48.0 - 3.0 * pi / 16.0 * ln2a();
      }));

  out.push_back(make(
      "S9.ARIA0WT", "eq. (aria0wt) int_0^pi x^2 / (1 - Q^2 cos^2 2x) dx, Q = 2q/(1+q^2)", full,
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = apow(-p.r);
        const double Q = 2.0 * q / (1.0 + q * q);
        return x2_ratio(one(), cos2_sq(1.0, -Q * Q), 1);
      },
      [](const Params& p) {
        const double q = apow(-p.r);
        return (1.0 + q * q) / (1.0 - q * q) * (pi3() / 3.0 + pi / 4.0 * li2(q * q));
      },
      "q = (-beta)^r"));

  out.push_back(make(
      "S9.RU2AYAB", "eq. (ru2ayab) int_0^pi x^2 cos 2x / (1 - Q^2 cos^2 2x) dx, Q = 2q/(1+q^2)",
      full, {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = apow(-p.r);
        const double Q = 2.0 * q / (1.0 + q * q);
        return x2_ratio(cos2x(), cos2_sq(1.0, -Q * Q), 1);
      },
      [](const Params& p) {
        const double q = apow(-p.r);
        const double Q = 2.0 * q / (1.0 + q * q);
        return pi / (2.0 * Q) * (1.0 + q * q) / (1.0 - q * q) * (li2(q) - li2(-q));
      },
      "q = (-beta)^r"));

  // r even: L_r^2 - 4 cos^2 2x; r odd: L_r^2 + 4 sin^2 2x
  auto jiv_den = [](long r) {
    return r % 2 == 0 ? cos2_sq(sq(L(r)), -4.0) : sin2_sq(sq(L(r)), 4.0);
  };
  auto jiv_bracket = [](long r) { return pi3() / 3.0 + pi / 4.0 * li2(bpow(2 * r)); };

  out.push_back(make(
      "S9.JIVTZPL", "eq. (jivtzpl) int_0^pi x^2 / (L_r^2 - 4 cos^2 2x) (r even), / (L_r^2 + 4 sin^2 2x) (r odd)",
      full, {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(one(), jiv_den(p.r), 1); },
      [=](const Params& p) { return jiv_bracket(p.r) / (F(2 * p.r) * s5()); }));

  // r even: 5F_r^2 + 4 sin^2 2x; r odd: 5F_r^2 - 4 cos^2 2x
  auto isek_den = [](long r) {
    const double f2 = 5.0 * sq(F(r));
    return r % 2 == 0 ? sin2_sq(f2, 4.0) : cos2_sq(f2, -4.0);
  };

  out.push_back(make(
      "S9.ISEKZ49",
      "eq. (isekz49) int_0^pi x^2 cos 2x / (5F_r^2 + 4 sin^2 2x) (r even), / (5F_r^2 - 4 cos^2 2x) (r odd)",
      full, {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(cos2x(), isek_den(p.r), 1); },
      [](const Params& p) {
        const double v = pi / 4.0 * li2_diff(p.r);
        return p.r % 2 == 0 ? v / (F(p.r) * s5()) : -v / L(p.r);
      }));

  out.push_back(make(
      "S9.JIVTZPL.PART", "particular case int_0^pi x^2 / (1 + 4 sin^2 2x) dx", full, {},
      [](const Params&) { return x2_ratio(one(), sin2_sq(1.0, 4.0), 1); },
      [](const Params&) { return (7.0 * pi3() / 20.0 - pi / 4.0 * ln2a()) / s5(); }));

  out.push_back(make(
      "S9.ISEKZ49.PART", "particular case int_0^pi x^2 cos 2x / (5 - 4 cos^2 2x) dx", full, {},
      [](const Params&) { return x2_ratio(cos2x(), cos2_sq(5.0, -4.0), 1); },
      [](const Params&) { return pi3() / 24.0 - 3.0 * pi / 8.0 * ln2a(); }));

  // Sums and differences of the two preceding theorems.
  auto half_bracket = [](long r) {
    return (pi3() / 6.0 + pi / 8.0 * li2(bpow(2 * r))) / (F(2 * r) * s5());
  };
  struct SinCos {
    const char* id;
    const char* anchor;
    bool even;
    bool cos_weight;
    double sign;
  };
  const SinCos sc[] = {
      {"S9.SINCOS.1", "corollary r even: int_0^pi x^2 cos^2 x / (L_r^2 - 4 cos^2 2x) dx", true, true, 1.0},
      {"S9.SINCOS.2", "corollary r even: int_0^pi x^2 sin^2 x / (L_r^2 - 4 cos^2 2x) dx", true, false, -1.0},
      {"S9.SINCOS.3", "corollary r odd: int_0^pi x^2 sin^2 x / (L_r^2 + 4 sin^2 2x) dx", false, false, 1.0},
      {"S9.SINCOS.4", "corollary r odd: int_0^pi x^2 cos^2 x / (L_r^2 + 4 sin^2 2x) dx", false, true, -1.0},
  };
  for (const SinCos& c : sc) {
    const bool even = c.even, cw = c.cos_weight;
    const double sign = c.sign;
    out.push_back(make(
        c.id, c.anchor, full, {even ? p_even("r", 2, 10) : p_odd("r", 1, 9)},
        [=](const Params& p) {
          return x2_ratio(cw ? cos_sq(0.0, 1.0) : sin_sq(0.0, 1.0), jiv_den(p.r), 1);
        },
        [=](const Params& p) {
          const double scale = even ? 8.0 * F(p.r) * s5() : 8.0 * L(p.r);
          return half_bracket(p.r) + sign * pi / scale * li2_diff(p.r);
        }));
  }
  out.push_back(make(
      "S9.SINCOS.PART1", "particular case int_0^pi x^2 sin^2 x / (1 + 4 sin^2 2x) dx", full, {},
      [](const Params&) { return x2_ratio(sin_sq(0.0, 1.0), sin2_sq(1.0, 4.0), 1); },
      [](const Params&) {
        return (-s5() / 40.0 + 3.0 / 16.0) * pi * ln2a() + (7.0 * s5() / 200.0 - 1.0 / 48.0) * pi3();
      }));
  out.push_back(make(
      "S9.SINCOS.PART2", "particular case int_0^pi x^2 cos^2 x / (1 + 4 sin^2 2x) dx", full, {},
      [](const Params&) { return x2_ratio(cos_sq(0.0, 1.0), sin2_sq(1.0, 4.0), 1); },
      [](const Params&) {
        return -(s5() / 40.0 + 3.0 / 16.0) * pi * ln2a() + (7.0 * s5() / 200.0 + 1.0 / 48.0) * pi3();
      }));

  out.push_back(make(
      "S9.PXI3HD5",
      "eq. (pxi3hd5) int_0^pi x^2 / (L_r^2 - 4 cos^2 2x)^2 (r even), / (L_r^2 + 4 sin^2 2x)^2 (r odd)",
      full, {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(one(), jiv_den(p.r), 2); },
      [=](const Params& p) {
        const double f2r = F(2 * p.r);
        return L(2 * p.r) / (5.0 * cube(f2r) * s5()) * jiv_bracket(p.r) -
               pi / (20.0 * f2r * f2r) * std::log1p(-bpow(2 * p.r));
      }));

  out.push_back(make(
      "S9.EZYW57R",
      "eq. (ezyw57r) int_0^pi x^2 cos 2x / (5F_r^2 + 4 sin^2 2x)^2 (r even), / (5F_r^2 - 4 cos^2 2x)^2 (r odd)",
      full, {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(cos2x(), isek_den(p.r), 2); },
      [](const Params& p) {
        const long r = p.r;
        const double b = bpow(r);
        const double head = pi / (8.0 * F(2 * r) * s5()) * std::log((1.0 + b) / (1.0 - b));
        if (r % 2 == 0) {
          const double f = F(r);
          return (head + pi / (40.0 * f * f) * li2_diff(r)) / (f * s5());
        }
        const double l = L(r);
        return -(head + pi / (8.0 * l * l) * li2_diff(r)) / l;
      }));

  out.push_back(make(
      "S9.PXI3HD5.PART", "particular case int_0^pi x^2 / (1 + 4 sin^2 2x)^2 dx", full, {},
      [](const Params&) { return x2_ratio(one(), sin2_sq(1.0, 4.0), 2); },
      [](const Params&) {
        return 21.0 / 100.0 * pi3() / s5() - 3.0 * pi / (20.0 * s5()) * ln2a() + pi / 20.0 * lna();
      }));

  out.push_back(make(
      "S9.EZYW57R.PART", "particular case int_0^pi x^2 cos 2x / (5 - 4 cos^2 2x)^2 dx", full, {},
      [](const Params&) { return x2_ratio(cos2x(), cos2_sq(5.0, -4.0), 2); },
      [](const Params&) {
        return 3.0 * pi / (8.0 * s5()) * lna() + pi3() / 48.0 - 3.0 * pi / 16.0 * ln2a();
      }));
}

void add_imaginary_q(Cases& out) {
  const Strategy full = finite(0.0, pi);

  out.push_back(make(
      "S9.XITQGR6", "eq. (xitqgr6) int_0^pi x^2 / (1 + R^2 cos^2 2x) dx, R = 2q/(1-q^2)", full,
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = apow(-p.r);
        const double R = 2.0 * q / (1.0 - q * q);
        return x2_ratio(one(), cos2_sq(1.0, R * R), 1);
      },
      [](const Params& p) {
        const double q = apow(-p.r);
        return (1.0 - q * q) / (1.0 + q * q) * (pi3() / 3.0 + pi / 4.0 * li2(-q * q));
      },
      "q = (-beta)^r"));

  out.push_back(make(
      "S9.D64V4ZE", "eq. (d64v4ze) int_0^pi x^2 cos 2x / (1 + R^2 cos^2 2x) dx, R = 2q/(1-q^2)",
      full, {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = apow(-p.r);
        const double R = 2.0 * q / (1.0 - q * q);
        return x2_ratio(cos2x(), cos2_sq(1.0, R * R), 1);
      },
      [](const Params& p) {
        const double q = apow(-p.r);
        const double R = 2.0 * q / (1.0 - q * q);
        const double a = std::atan(q);
        return pi / R * (1.0 - q * q) / (1.0 + q * q) *
               (a * std::log(q) + 0.5 * cl(2.0 * a) + 0.5 * cl(pi - 2.0 * a));
      },
      "q = (-beta)^r"));

  // r even: 5F_r^2 + 4 cos^2 2x; r odd: L_r^2 + 4 cos^2 2x
  auto eun_den = [](long r) {
    return cos2_sq(r % 2 == 0 ? 5.0 * sq(F(r)) : sq(L(r)), 4.0);
  };
  auto eun_bracket = [](long r) { return pi3() / 3.0 + pi / 4.0 * li2(-bpow(2 * r)); };

  out.push_back(make(
      "S9.EUNBS0S",
      "eq. (eunbs0s) int_0^pi x^2 / (5F_r^2 + 4 cos^2 2x) (r even), / (L_r^2 + 4 cos^2 2x) (r odd)",
      full, {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(one(), eun_den(p.r), 1); },
      [=](const Params& p) { return eun_bracket(p.r) / (F(2 * p.r) * s5()); }));

  out.push_back(make(
      "S9.EUNBS0S.SQ",
      "theorem int_0^pi x^2 / (5F_r^2 + 4 cos^2 2x)^2 (r even), / (L_r^2 + 4 cos^2 2x)^2 (r odd)",
      full, {p_any("r", 1, 10)}, [=](const Params& p) { return x2_ratio(one(), eun_den(p.r), 2); },
      [=](const Params& p) {
        const double f2r = F(2 * p.r);
        return L(2 * p.r) / (5.0 * cube(f2r) * s5()) * eun_bracket(p.r) -
               pi / (20.0 * f2r * f2r) * std::log1p(bpow(2 * p.r));
      }));

  out.push_back(make(
      "S9.CLAUSEN.E", "theorem r even: int_0^pi x^2 cos 2x / (5F_r^2 + 4 cos^2 2x) dx", full,
      {p_even("r", 2, 10)},
      [](const Params& p) { return x2_ratio(cos2x(), cos2_sq(5.0 * sq(F(p.r)), 4.0), 1); },
      [](const Params& p) {
        const double th = std::atan(2.0 / (F(p.r) * s5())), l = L(p.r);
        return pi / (4.0 * l) * (cl(th) + cl(pi - th)) - pi * p.r / (4.0 * l) * th * lna();
      }));

  out.push_back(make(
      "S9.CLAUSEN.O", "theorem r odd: int_0^pi x^2 cos 2x / (L_r^2 + 4 cos^2 2x) dx", full,
      {p_odd("r", 1, 9)},
      [](const Params& p) { return x2_ratio(cos2x(), cos2_sq(sq(L(p.r)), 4.0), 1); },
      [](const Params& p) {
        const double th = std::atan(2.0 / L(p.r)), f5 = F(p.r) * s5();
        return pi / (4.0 * f5) * (cl(th) + cl(pi - th)) - pi * p.r / (4.0 * f5) * th * lna();
      }));
}

}  // namespace

void add_s8_s9(Cases& out) {
  add_section8(out);
  add_lewin_nine(out);
  add_cos2_squares(out);
  add_imaginary_q(out);
}

}  // namespace fibint::cat
