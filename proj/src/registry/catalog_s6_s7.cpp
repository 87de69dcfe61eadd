#include "catalog.hpp"

namespace fibint::cat {

namespace {

// x sin x / (a + b sin^2 x)
Integrand x_sin_over(double a, double b) {
  return plain([a, b](double x) {
    const double s = std::sin(x);
    return x * s / (a + b * s * s);
  });
}

// x sin x / (a + b sin^2 x)^2
Integrand x_sin_over_sq(double a, double b) {
  return plain([a, b](double x) {
    const double s = std::sin(x);
    const double d = a + b * s * s;
    return x * s / (d * d);
  });
}

// x sin x / (a + b cos^2 x)^p for p = 1, 2
Integrand x_sin_over_cos(double a, double b, int p) {
  return plain([=](double x) {
    const double s = std::sin(x), c = std::cos(x);
    const double d = a + b * c * c;
    return x * s / (p == 1 ? d : d * d);
  });
}

void add_section6(Cases& out) {
  const Strategy full = finite(0.0, pi);

  out.push_back(make(
      "S6.U6JQLAY", "eq. (u6jqlay) int_0^pi x sin x / (1 + (2q/(1-q^2))^2 sin^2 x) dx", full,
      {p_any("r", -4, 6, {0})},
      [](const Params& p) {
        const double q = bpow(p.r);
        const double Q = 2.0 * q / (1.0 - q * q);
        return x_sin_over(1.0, Q * Q);
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        const double d = 1.0 - q * q;
        return pi / 2.0 * std::log(std::abs((1.0 + q) / (1.0 - q))) / (q / d * (1.0 + q * q) / d);
      },
      "q = beta^r"));

  out.push_back(make(
      "S6.CPWMQ60", "eq. (cpwmq60) r odd: int_0^pi x sin x / (L_r^2 + 4 sin^2 x) dx", full,
      {p_odd("r", 1, 9)},
      [](const Params& p) { return x_sin_over(L(p.r) * L(p.r), 4.0); },
      [](const Params& p) {
        const double f5 = F(p.r) * s5();
        return pi / (2.0 * f5) * std::log((f5 + 2.0) / L(p.r));
      }));

  out.push_back(make(
      "S6.RDJRA1D", "eq. (rdjra1d) r even: int_0^pi x sin x / (L_r^2 - 4 cos^2 x) dx", full,
      {p_even("r", 2, 10)},
      [](const Params& p) { return x_sin_over_cos(L(p.r) * L(p.r), -4.0, 1); },
      [](const Params& p) {
        const double l = L(p.r);
        return pi / (2.0 * l) * std::log(F(p.r) * s5() / (l - 2.0));
      },
      "erratum: the printed denominator L_r^2 - 4 sin^2 x is read as L_r^2 - 4 cos^2 x, as in "
      "the squared corollary"));

  out.push_back(make(
      "S6.SQ.A", "corollary r odd: int_0^pi x sin x / (L_r^2 + 4 sin^2 x)^2 dx", full,
      {p_odd("r", 1, 9)},
      [](const Params& p) { return x_sin_over_sq(L(p.r) * L(p.r), 4.0); },
      [](const Params& p) {
        const double f = F(p.r), f5 = f * s5(), f2r = F(2 * p.r);
        return pi / (20.0 * s5() * f * f * f) * std::log((f5 + 2.0) / L(p.r)) +
               pi / (10.0 * f2r * f2r);
      }));

  out.push_back(make(
      "S6.SQ.B", "corollary r even: int_0^pi x sin x / (L_r^2 - 4 cos^2 x)^2 dx", full,
      {p_even("r", 2, 10)},
      [](const Params& p) { return x_sin_over_cos(L(p.r) * L(p.r), -4.0, 2); },
      [](const Params& p) {
        const double l = L(p.r), f2r = F(2 * p.r);
        return pi / (4.0 * l * l * l) * std::log(F(p.r) * s5() / (l - 2.0)) +
               pi / (10.0 * f2r * f2r);
      }));

  out.push_back(make(
      "S6.RLJJ8TO", "eq. (rljj8to) int_0^pi x sin x / (4 + 5F_{2r}^2 sin^2 x) dx", full,
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double f = F(2 * p.r);
        return x_sin_over(4.0, 5.0 * f * f);
      },
      [](const Params& p) { return 2.0 * pi * p.r * s5() / (5.0 * F(4 * p.r)) * lna(); },
      "r = 0 excluded: F_0 = 0 makes the right-hand side 0/0"));

  out.push_back(make(
      "S6.SIN3CUBE", "corollary int_0^pi x sin^3 x / (4 + 5F_{2r}^2 sin^2 x)^2 dx", full,
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double f = F(2 * p.r);
        const double b = 5.0 * f * f;
        return plain([b](double x) {
          const double s = std::sin(x);
          const double d = 4.0 + b * s * s;
          return x * s * s * s / (d * d);
        });
      },
      [](const Params& p) {
        const double f4 = F(4 * p.r);
        return -pi / (10.0 * f4 * f4) + 2.0 * pi * s5() / 25.0 * L(4 * p.r) / (f4 * f4 * f4) * p.r * lna();
      }));

  out.push_back(make(
      "S6.GJNEYFK", "eq. (gjneyfk) int_0^pi x sin x / (1 + Q^2 sin^2 x) dx", full,
      {p_any("r", -4, 4)},
      [](const Params& p) {
        const double q = bpow(p.r);
        return x_sin_over(1.0, q * q);
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        const double w = std::sqrt(1.0 + q * q);
        return pi / (q * w) * std::asinh(q);
      },
      "Q = beta^r; ln(Q + sqrt(1 + Q^2)) evaluated as asinh Q"));

  out.push_back(make(
      "S6.SC3T62N", "eq. (sc3t62n) int_0^pi x sin x / (2L_{2r} - L_r^2 cos^2 x) dx", full,
      {p_any("r", 1, 10)},
      [](const Params& p) { return x_sin_over_cos(2.0 * L(2 * p.r), -L(p.r) * L(p.r), 1); },
      [](const Params& p) {
        const double r2 = std::sqrt(2.0), w = std::sqrt(L(2 * p.r));
        return pi * r2 / (2.0 * L(p.r) * w) * std::log((bpow(p.r) * r2 + w) / (apow(p.r) * r2 - w));
      }));

  out.push_back(make(
      "S6.QO33H5M", "eq. (qo33h5m) int_0^pi x sin x / (2L_{2r} - 5F_r^2 cos^2 x) dx", full,
      {p_any("r", 1, 10)},
      [](const Params& p) {
        return x_sin_over_cos(2.0 * L(2 * p.r), -5.0 * F(p.r) * F(p.r), 1);
      },
      [](const Params& p) {
        const double r2 = std::sqrt(2.0), w = std::sqrt(L(2 * p.r));
        return pi * s5() * r2 / (10.0 * F(p.r) * w) *
               std::log((-bpow(p.r) * r2 + w) / (apow(p.r) * r2 - w));
      }));

  out.push_back(make(
      "S6.PGLRQHP", "eq. (pglrqhp) int_0^pi x sin x / (1 - Q^2 sin^2 x) dx", full,
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = bpow(p.r);
        return x_sin_over(1.0, -q * q);
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        const double w = std::sqrt(1.0 - q * q);
        return pi / (q * w) * std::atan(q / w);
      },
      "Q = beta^r"));

  out.push_back(make(
      "S6.FMK6KRX.E", "theorem (thm.fmk6krx) r even: int_0^pi x sin x / (L_r^2 - 4 sin^2 x) dx",
      full, {p_even("r", 2, 10)},
      [](const Params& p) { return x_sin_over(L(p.r) * L(p.r), -4.0); },
      [](const Params& p) {
        const double f5 = F(p.r) * s5();
        return pi / 2.0 / f5 * std::atan(2.0 / f5);
      }));

  out.push_back(make(
      "S6.FMK6KRX.O", "theorem (thm.fmk6krx) r odd: int_0^pi x sin x / (5F_r^2 - 4 sin^2 x) dx",
      full, {p_odd("r", 1, 9)},
      [](const Params& p) { return x_sin_over(5.0 * F(p.r) * F(p.r), -4.0); },
      [](const Params& p) {
        const double l = L(p.r);
        return pi / 2.0 / l * std::atan(2.0 / l);
      }));

  out.push_back(make(
      "S6.FMK6KRX.PART", "particular case int_0^pi x sin x / (5 - 4 sin^2 x) dx = (pi/2) arctan 2",
      full, {}, [](const Params&) { return x_sin_over(5.0, -4.0); },
      [](const Params&) { return pi / 2.0 * std::atan(2.0); }));

  out.push_back(make(
      "S6.FMK6SQ.E", "corollary r even: int_0^pi x sin x / (L_r^2 - 4 sin^2 x)^2 dx", full,
      {p_even("r", 2, 10)},
      [](const Params& p) { return x_sin_over_sq(L(p.r) * L(p.r), -4.0); },
      [](const Params& p) {
        const double f = F(p.r), f5 = f * s5(), f2r = F(2 * p.r);
        return pi / (20.0 * s5() * f * f * f) * std::atan(2.0 / f5) + pi / (10.0 * f2r * f2r);
      }));

  out.push_back(make(
      "S6.FMK6SQ.O", "corollary r odd: int_0^pi x sin x / (5F_r^2 - 4 sin^2 x)^2 dx", full,
      {p_odd("r", 1, 9)},
      [](const Params& p) { return x_sin_over_sq(5.0 * F(p.r) * F(p.r), -4.0); },
      [](const Params& p) {
        const double l = L(p.r), f2r = F(2 * p.r);
        return pi / (4.0 * l * l * l) * std::atan(2.0 / l) + pi / (10.0 * f2r * f2r);
      }));

  out.push_back(make(
      "S6.QUARTIC.A", "remark int_0^pi x sin x / (1 - Q^4 sin^4 x) dx", full, {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q4 = ipow(bpow(p.r), 4);
        return plain([q4](double x) {
          const double s = std::sin(x);
          return x * s / (1.0 - q4 * s * s * s * s);
        });
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        const double wm = std::sqrt(1.0 - q * q), wp = std::sqrt(1.0 + q * q);
        return pi / (2.0 * q * wm) * std::atan(q / wm) + pi / (2.0 * q * wp) * std::asinh(q);
      },
      "Q = beta^r"));

  out.push_back(make(
      "S6.QUARTIC.B", "remark int_0^pi x sin^3 x / (1 - Q^4 sin^4 x) dx", full, {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q4 = ipow(bpow(p.r), 4);
        return plain([q4](double x) {
          const double s = std::sin(x);
          return x * s * s * s / (1.0 - q4 * s * s * s * s);
        });
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        const double q3 = q * q * q;
        const double wm = std::sqrt(1.0 - q * q), wp = std::sqrt(1.0 + q * q);
        return pi / (2.0 * q3 * wm) * std::atan(q / wm) - pi / (2.0 * q3 * wp) * std::asinh(q);
      },
      "Q = beta^r"));

  out.push_back(make(
      "S6.FM2DODR",
      "eq. (fm2dodr) int_0^{pi/2} sin^{2m-1} x / (1 + Q^2 sin^2 x)^m dx = "
      "(1/pi) int_0^pi x sin^{2m-1} x / (1 + Q^2 sin^2 x)^m dx",
      finite(0.0, pi / 2.0), {p_any("m", 1, 3), p_any("r", -1, 1)},
      [](const Params& p) {
        const double q2 = std::ldexp(1.0, static_cast<int>(2 * p.r));
        const long m = p.m;
        return plain([=](double x) {
          const double s = std::sin(x);
          return ipow(s, 2 * m - 1) / ipow(1.0 + q2 * s * s, m);
        });
      },
      [](const Params& p) {
        const double q2 = std::ldexp(1.0, static_cast<int>(2 * p.r));
        const long m = p.m;
        const Integrand g = plain([=](double x) {
          const double s = std::sin(x);
          return x * ipow(s, 2 * m - 1) / ipow(1.0 + q2 * s * s, m);
        });
        return integrate_finite(g, 0.0, pi, 1e-13).value / pi;
      },
      "structural: Q = 2^r; the right-hand side is itself a quadrature"));
  out.back().default_tol = 1e-9;
}

// x^2 / (a + b cos 2x)
Integrand x2_over_cos2(double a, double b) {
  return plain([a, b](double x) { return x * x / (a + b * std::cos(2.0 * x)); });
}

Integrand x2_over_cos2_sq(double a, double b) {
  return plain([a, b](double x) {
    const double d = a + b * std::cos(2.0 * x);
    return x * x / (d * d);
  });
}

double eleven_bracket(double li) { return pi * pi * pi / 24.0 + pi / 2.0 * li; }

void add_section7(Cases& out) {
  const Strategy quarter = finite(0.0, pi / 2.0);
  const double ln2a = lna() * lna();

  out.push_back(make(
      "S7.ID1", "eq. (id1_from_eleven) r even: int_0^{pi/2} x^2 / (L_r + 2 cos 2x) dx", quarter,
      {p_even("r", 2, 10)}, [](const Params& p) { return x2_over_cos2(L(p.r), 2.0); },
      [](const Params& p) { return eleven_bracket(li2(bpow(p.r))) / (s5() * F(p.r)); }));

  out.push_back(make(
      "S7.ID2", "eq. (id2_from_eleven) r odd: int_0^{pi/2} x^2 / (sqrt5 F_r - 2 cos 2x) dx",
      quarter, {p_odd("r", 1, 9)},
      [](const Params& p) { return x2_over_cos2(s5() * F(p.r), -2.0); },
      [](const Params& p) { return eleven_bracket(li2(bpow(p.r))) / L(p.r); }));

  out.push_back(make(
      "S7.ID1.PART", "particular case int_0^{pi/2} x^2 / (3 + 2 cos 2x) dx", quarter, {},
      [](const Params&) { return x2_over_cos2(3.0, 2.0); },
      [ln2a](const Params&) { return (3.0 * pi * pi * pi / 40.0 - pi / 2.0 * ln2a) / s5(); }));

  out.push_back(make(
      "S7.ID2.PART", "particular case int_0^{pi/2} x^2 / (sqrt5 - 2 cos 2x) dx", quarter, {},
      [](const Params&) { return x2_over_cos2(s5(), -2.0); },
      [ln2a](const Params&) { return pi * pi * pi / 120.0 + pi / 4.0 * ln2a; }));

  out.push_back(make(
      "S7.ID3", "eq. (id3_from_eleven) r even: int_0^{pi/2} x^2 / (L_r + 2 cos 2x)^2 dx", quarter,
      {p_even("r", 2, 10)}, [](const Params& p) { return x2_over_cos2_sq(L(p.r), 2.0); },
      [](const Params& p) {
        const double f5 = s5() * F(p.r), br = bpow(p.r);
        return L(p.r) / (f5 * f5 * f5) * eleven_bracket(li2(br)) -
               pi / 2.0 * std::log1p(-br) / (5.0 * F(p.r) * F(p.r));
      }));

  out.push_back(make(
      "S7.ID4", "eq. (id4_from_eleven) r odd: int_0^{pi/2} x^2 / (sqrt5 F_r - 2 cos 2x)^2 dx",
      quarter, {p_odd("r", 1, 9)},
      [](const Params& p) { return x2_over_cos2_sq(s5() * F(p.r), -2.0); },
      [](const Params& p) {
        const double l = L(p.r), br = bpow(p.r);
        return s5() * F(p.r) / (l * l * l) * eleven_bracket(li2(br)) -
               pi / 2.0 * std::log1p(-br) / (l * l);
      }));

  out.push_back(make(
      "S7.ID3.PART", "particular case int_0^{pi/2} x^2 / (3 + 2 cos 2x)^2 dx", quarter, {},
      [](const Params&) { return x2_over_cos2_sq(3.0, 2.0); },
      [ln2a](const Params&) {
        return 3.0 / (5.0 * s5()) * (3.0 * pi * pi * pi / 40.0 - pi / 2.0 * ln2a) + pi / 10.0 * lna();
      }));

  out.push_back(make(
      "S7.ID4.PART", "particular case int_0^{pi/2} x^2 / (sqrt5 - 2 cos 2x)^2 dx", quarter, {},
      [](const Params&) { return x2_over_cos2_sq(s5(), -2.0); },
      [ln2a](const Params&) {
        return s5() * (pi * pi * pi / 120.0 + pi / 4.0 * ln2a) - pi / 2.0 * lna();
      }));

  // L_{2r} + sqrt5 F_{2r} cos 2x = 2 beta^{2r} + 2 sqrt5 F_{2r} cos^2 x avoids the
  // cancellation near x = pi/2.
  auto id5_den = [](long r) {
    const double b2 = 2.0 * bpow(2 * r), c = 2.0 * s5() * F(2 * r);
    return [=](double x) {
      const double cx = std::cos(x);
      return b2 + c * cx * cx;
    };
  };

  out.push_back(make(
      "S7.ID5", "eq. (id5_from_eleven) r even: int_0^{pi/2} x^2 / (L_{2r} + sqrt5 F_{2r} cos 2x) dx",
      quarter, {p_even("r", 2, 10)},
      [=](const Params& p) {
        const auto den = id5_den(p.r);
        return plain([=](double x) { return x * x / den(x); });
      },
      [](const Params& p) {
        return pi * pi * pi / 48.0 + pi / 4.0 * li2(s5() * F(p.r) / L(p.r));
      }));

  out.push_back(make(
      "S7.ID5.PART", "particular case int_0^{pi/2} x^2 / (7 + 3 sqrt5 cos 2x) dx", quarter, {},
      [=](const Params&) {
        const auto den = id5_den(2);
        return plain([=](double x) { return x * x / den(x); });
      },
      [](const Params&) { return pi * pi * pi / 48.0 + pi / 4.0 * li2(s5() / 3.0); }));

  // sqrt5 F_{2r} + L_{2r} cos 2x = -2 beta^{2r} + 2 L_{2r} cos^2 x
  auto id6 = [=](long r) {
    const auto den = id5_den(r);
    const double b2 = 2.0 * bpow(2 * r), c = 2.0 * L(2 * r);
    return plain([=](double x) {
      const double cx = std::cos(x);
      const double d = den(x);
      return x * x * (c * cx * cx - b2) / (d * d);
    });
  };

  out.push_back(make(
      "S7.ID6",
      "eq. (id6_from_eleven) r even: int_0^{pi/2} x^2 (sqrt5 F_{2r} + L_{2r} cos 2x) / "
      "(L_{2r} + sqrt5 F_{2r} cos 2x)^2 dx",
      quarter, {p_even("r", 2, 10)}, [=](const Params& p) { return id6(p.r); },
      [](const Params& p) {
        return pi / (2.0 * s5() * F(2 * p.r)) * std::log1p(-s5() * F(p.r) / L(p.r));
      }));

  out.push_back(make(
      "S7.ID6.PART",
      "particular case int_0^{pi/2} x^2 (3 sqrt5 + 7 cos 2x) / (7 + 3 sqrt5 cos 2x)^2 dx", quarter,
      {}, [=](const Params&) { return id6(2); },
      [](const Params&) {
        return pi / (6.0 * s5()) * std::log(2.0 / (3.0 * alpha() * alpha()));
      }));

  out.push_back(make(
      "S7.ID7", "eq. (id7_from_eleven) int_0^{pi/2} x^2 / (L_r^2 + 4 + 4 L_r cos 2x) dx", quarter,
      {p_any("r", 2, 10)},
      [](const Params& p) {
        const double l = L(p.r);
        return x2_over_cos2(l * l + 4.0, 4.0 * l);
      },
      [](const Params& p) {
        const double l = L(p.r);
        return eleven_bracket(li2(2.0 / l)) / (l * l - 4.0);
      }));

  out.push_back(make(
      "S7.ID7.PART", "particular case int_0^{pi/2} x^2 / (5 + 4 cos 2x) dx", quarter, {},
      [](const Params&) { return x2_over_cos2(5.0, 4.0); },
      [](const Params&) {
        const double l2 = std::log(2.0);
        return pi * pi * pi / 36.0 - pi / 12.0 * l2 * l2;
      }));

  auto id8 = [](double l) {
    return plain([l](double x) {
      const double c = std::cos(2.0 * x);
      const double d = l * l + 4.0 + 4.0 * l * c;
      return x * x * (l + 2.0 * c) / (d * d);
    });
  };

  out.push_back(make(
      "S7.ID8",
      "eq. (id8_from_eleven) int_0^{pi/2} x^2 (L_r + 2 cos 2x) / (L_r^2 + 4 + 4 L_r cos 2x)^2 dx",
      quarter, {p_any("r", 2, 10)}, [=](const Params& p) { return id8(L(p.r)); },
      [](const Params& p) {
        const double l = L(p.r), d = l * l - 4.0;
        return l / (d * d) * eleven_bracket(li2(2.0 / l)) - pi / 4.0 / (l * d) * std::log1p(-2.0 / l);
      }));

  out.push_back(make(
      "S7.ID8.PART", "particular case int_0^{pi/2} x^2 (2 + cos 2x) / (5 + 4 cos 2x)^2 dx", quarter,
      {},
      [](const Params&) {
        return plain([](double x) {
          const double c = std::cos(2.0 * x);
          const double d = 5.0 + 4.0 * c;
          return x * x * (2.0 + c) / (d * d);
        });
      },
      [](const Params&) {
        const double l2 = std::log(2.0);
        return pi * pi * pi / 54.0 - pi / 18.0 * l2 * l2 + pi / 24.0 * l2;
      }));
}

}  // namespace

void add_s6_s7(Cases& out) {
  add_section6(out);
  add_section7(out);
}

}  // namespace fibint::cat
