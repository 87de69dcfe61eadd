#include "catalog.hpp"

namespace fibint::cat {

namespace {

// sqrt(beta^r) for even r, sqrt(-beta^r) for odd r.
double root_b(long r) { return std::sqrt(std::fabs(bpow(r))); }

double li2_odd(double s) { return li2(s) - li2(-s); }

// Cl2(2 atan s) + Cl2(pi - 2 atan s)
double cl_sum(double s) {
  const double t = 2.0 * std::atan(s);
  return cl(t) + cl(pi - t);
}

// x^2 w(x) / (a + b cos 2x)^p
Integrand cos_over_lin(double a, double b, int p, int harmonic = 1) {
  return plain([=](double x) {
    const double d = a + b * std::cos(2.0 * x);
    return x * x * std::cos(harmonic * x) / (p == 1 ? d : d * d);
  });
}

// x^2 w(x) / (a^2 - 4 cos^2 2x)
Integrand cos_over_diff(double a, std::function<double(double)> w) {
  return plain([=](double x) {
    const double c = std::cos(2.0 * x);
    return x * x * w(x) / ((a - 2.0 * c) * (a + 2.0 * c));
  });
}

double quad(const Integrand& f) { return integrate_finite(f, 0.0, pi, 1e-13).value; }

void add_linear(Cases& out) {
  const Strategy full = finite(0.0, pi);

  out.push_back(make(
      "S10.RI9NKKO", "eq. (ri9nkko) r even: int_0^pi x^2 cos x / (L_r - 2 cos 2x) dx", full,
      {p_even("r", 2, 10)}, [](const Params& p) { return cos_over_lin(L(p.r), -2.0, 1); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r);
        return -pi * s / (1.0 - b) * li2_odd(s);
      }));
  out.push_back(make(
      "S10.UJHMYEF", "eq. (ujhmyef) r odd: int_0^pi x^2 cos x / (F_r sqrt5 - 2 cos 2x) dx", full,
      {p_odd("r", 1, 9)}, [](const Params& p) { return cos_over_lin(F(p.r) * s5(), -2.0, 1); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r);
        return -pi * s / (1.0 + b) * li2_odd(s);
      }));
  out.push_back(make(
      "S10.RI9NKKO.PART", "particular case int_0^pi x^2 cos x / (3 - 2 cos 2x) dx", full, {},
      [](const Params&) { return cos_over_lin(3.0, -2.0, 1); },
      [](const Params&) { return -pi * pi * pi / 6.0 + 1.5 * pi * lna() * lna(); }));

  out.push_back(make(
      "S10.SQ.E", "theorem r even: int_0^pi x^2 cos x / (L_r - 2 cos 2x)^2 dx", full,
      {p_even("r", 2, 10)}, [](const Params& p) { return cos_over_lin(L(p.r), -2.0, 2); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), a = F(p.r) * s5();
        const double w = s / (1.0 - b);
        return -pi / a * w * (0.5 + b / (1.0 - b)) * li2_odd(s) -
               pi / (2.0 * a) * w * std::log((1.0 + s) / (1.0 - s));
      }));
  out.push_back(make(
      "S10.SQ.O", "theorem r odd: int_0^pi x^2 cos x / (F_r sqrt5 - 2 cos 2x)^2 dx", full,
      {p_odd("r", 1, 9)}, [](const Params& p) { return cos_over_lin(F(p.r) * s5(), -2.0, 2); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), l = L(p.r);
        const double w = s / (1.0 + b);
        return -pi / l * w * (0.5 - b / (1.0 + b)) * li2_odd(s) -
               pi / (2.0 * l) * w * std::log((1.0 + s) / (1.0 - s));
      }));
  out.push_back(make(
      "S10.SQ.PART", "particular case int_0^pi x^2 cos x / (3 - 2 cos 2x)^2 dx", full, {},
      [](const Params&) { return cos_over_lin(3.0, -2.0, 2); },
      [](const Params&) {
        return -pi / 4.0 * (pi * pi / 3.0 - 3.0 * lna() * lna()) - 3.0 * pi / (2.0 * s5()) * lna();
      }));

  out.push_back(make(
      "S10.PI7I3YL", "eq. (pi7i3yl) r even: int_0^pi x^2 cos x / (L_r + 2 cos 2x) dx", full,
      {p_even("r", 2, 10)}, [](const Params& p) { return cos_over_lin(L(p.r), 2.0, 1); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r);
        const double w = pi * s / (1.0 + b);
        return -w * 2.0 * std::atan(s) * std::log(s) - w * cl_sum(s);
      }));
  out.push_back(make(
      "S10.A40FGGG", "eq. (a40fggg) r odd: int_0^pi x^2 cos x / (F_r sqrt5 + 2 cos 2x) dx", full,
      {p_odd("r", 1, 9)}, [](const Params& p) { return cos_over_lin(F(p.r) * s5(), 2.0, 1); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r);
        const double w = pi * s / (1.0 - b);
        return -w * 2.0 * std::atan(s) * std::log(s) - w * cl_sum(s);
      }));
  out.push_back(make(
      "S10.PI7I3YL.PART", "particular case int_0^pi x^2 cos x / (3 + 2 cos 2x) dx", full, {},
      [](const Params&) { return cos_over_lin(3.0, 2.0, 1); },
      [](const Params&) {
        const double t = std::atan(2.0);
        return pi / s5() * t * lna() - pi / s5() * (cl(t) + cl(pi - t));
      }));

  out.push_back(make(
      "S10.CLSQ.E", "theorem r even: int_0^pi x^2 cos x / (L_r + 2 cos 2x)^2 dx", full,
      {p_even("r", 2, 10)}, [](const Params& p) { return cos_over_lin(L(p.r), 2.0, 2); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), a = F(p.r) * s5();
        const double w = s / (1.0 + b), h = 0.5 - b / (1.0 + b);
        return -2.0 * pi / a * w * h * std::atan(s) * std::log(s) - pi / a * w * h * cl_sum(s) -
               pi / (2.0 * a) * w * std::atan(2.0 * s / (1.0 - b));
      },
      "erratum: the printed difference of Clausen values must be the sum "
      "Cl2(2 atan s) + Cl2(pi - 2 atan s), as differentiation of the unsquared form gives"));
  out.push_back(make(
      "S10.CLSQ.O", "theorem r odd: int_0^pi x^2 cos x / (F_r sqrt5 + 2 cos 2x)^2 dx", full,
      {p_odd("r", 1, 9)}, [](const Params& p) { return cos_over_lin(F(p.r) * s5(), 2.0, 2); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), l = L(p.r);
        const double w = s / (1.0 - b), h = 0.5 + b / (1.0 - b);
        return -2.0 * pi / l * w * h * std::atan(s) * std::log(s) - pi / l * w * h * cl_sum(s) -
               pi / (2.0 * l) * w * std::atan(2.0 * s / (1.0 + b));
      },
      "erratum: the printed difference of Clausen values must be the sum "
      "Cl2(2 atan s) + Cl2(pi - 2 atan s), as differentiation of the unsquared form gives"));
}

void add_structural(Cases& out) {
  const Strategy full = finite(0.0, pi);
  auto cos1 = [](double x) { return std::cos(x); };
  auto cos13 = [](double x) { return std::cos(x) + std::cos(3.0 * x); };

  out.push_back(make(
      "S10.QVB6JUR",
      "eq. (qvb6jur) int_0^pi x^2 cos x / (5F_r^2 - 4 cos^2 2x) dx = (I- + I+) / (2 F_r sqrt5)", full,
      {p_any("r", 1, 10)},
      [=](const Params& p) { return cos_over_diff(F(p.r) * s5(), cos1); },
      [](const Params& p) {
        const double a = F(p.r) * s5();
        return (quad(cos_over_lin(a, -2.0, 1)) + quad(cos_over_lin(a, 2.0, 1))) / (2.0 * a);
      },
      "structural: the right-hand side is itself a quadrature"));
  out.back().default_tol = 1e-9;

  out.push_back(make(
      "S10.A40QD9A",
      "eq. (a40qd9a) int_0^pi x^2 (cos x + cos 3x) / (5F_r^2 - 4 cos^2 2x) dx = (I- - I+) / 2", full,
      {p_any("r", 1, 10)},
      [=](const Params& p) { return cos_over_diff(F(p.r) * s5(), cos13); },
      [](const Params& p) {
        const double a = F(p.r) * s5();
        return 0.5 * (quad(cos_over_lin(a, -2.0, 1)) - quad(cos_over_lin(a, 2.0, 1)));
      },
      "structural; erratum: the printed sum of the two integrals must be a difference, "
      "since 1/(a - 2c) - 1/(a + 2c) = 4c/(a^2 - 4c^2)"));
  out.back().default_tol = 1e-9;

  out.push_back(make(
      "S10.BYWZH6U",
      "eq. (bywzh6u) int_0^pi x^2 cos x / (L_r^2 - 4 cos^2 2x) dx = (J- + J+) / (2 L_r)", full,
      {p_any("r", 2, 10)}, [=](const Params& p) { return cos_over_diff(L(p.r), cos1); },
      [](const Params& p) {
        const double l = L(p.r);
        return (quad(cos_over_lin(l, -2.0, 1)) + quad(cos_over_lin(l, 2.0, 1))) / (2.0 * l);
      },
      "structural; r = 1 excluded: L_1 - 2 cos 2x vanishes inside the interval"));
  out.back().default_tol = 1e-9;
}

void add_closed(Cases& out) {
  const Strategy full = finite(0.0, pi);
  auto cos1 = [](double x) { return std::cos(x); };
  auto cos3 = [](double x) { return std::cos(3.0 * x); };

  out.push_back(make(
      "S10.Y4DQFP7", "eq. (y4dqfp7) r odd: int_0^pi x^2 cos x / (5F_r^2 - 4 cos^2 2x) dx", full,
      {p_odd("r", 1, 9)}, [=](const Params& p) { return cos_over_diff(F(p.r) * s5(), cos1); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), a = F(p.r) * s5();
        return -pi / (2.0 * a) * s / (1.0 + b) * li2_odd(s) -
               pi / (2.0 * a) * s / (1.0 - b) * cl_sum(s) -
               pi / a * s / (1.0 - b) * std::atan(s) * std::log(s);
      }));

  out.push_back(make(
      "S10.GG6A1VX", "eq. (gg6a1vx) r odd: int_0^pi x^2 cos 3x / (5F_r^2 - 4 cos^2 2x) dx", full,
      {p_odd("r", 1, 9)}, [=](const Params& p) { return cos_over_diff(F(p.r) * s5(), cos3); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), ia = 1.0 / (F(p.r) * s5());
        return (ia - 1.0) * pi / 2.0 * s / (1.0 + b) * li2_odd(s) +
               (ia + 1.0) * pi / 2.0 * s / (1.0 - b) * cl_sum(s) +
               (ia + 1.0) * pi * s / (1.0 - b) * std::atan(s) * std::log(s);
      }));

  out.push_back(make(
      "S10.V11U6JR", "eq. (v11u6jr) r even: int_0^pi x^2 cos x / (L_r^2 - 4 cos^2 2x) dx", full,
      {p_even("r", 2, 10)}, [=](const Params& p) { return cos_over_diff(L(p.r), cos1); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), l = L(p.r);
        return -pi / (2.0 * l) * s / (1.0 - b) * li2_odd(s) -
               pi / (2.0 * l) * s / (1.0 + b) * cl_sum(s) -
               pi / l * s / (1.0 + b) * std::atan(s) * std::log(s);
      }));

  out.push_back(make(
      "S10.PADU4YO", "eq. (padu4yo) r even: int_0^pi x^2 cos 3x / (L_r^2 - 4 cos^2 2x) dx", full,
      {p_even("r", 2, 10)}, [=](const Params& p) { return cos_over_diff(L(p.r), cos3); },
      [](const Params& p) {
        const double s = root_b(p.r), b = bpow(p.r), il = 1.0 / L(p.r);
        return (il - 1.0) * pi / 2.0 * s / (1.0 - b) * li2_odd(s) +
               (il + 1.0) * pi / 2.0 * s / (1.0 + b) * cl_sum(s) +
               (il + 1.0) * pi * s / (1.0 + b) * std::atan(s) * std::log(s);
      }));

  out.push_back(make(
      "S10.PART9", "particular case int_0^pi x^2 cos x / (9 - 4 cos^2 2x) dx", full, {},
      [=](const Params&) { return cos_over_diff(3.0, cos1); },
      [](const Params&) {
        const double t = std::atan(2.0), l2 = lna() * lna();
        return -pi / 6.0 * (pi * pi / 6.0 - 1.5 * l2) + pi / (6.0 * s5()) * t * lna() -
               pi / (6.0 * s5()) * (cl(t) + cl(pi - t));
      }));
}

}  // namespace

void add_s10(Cases& out) {
  add_linear(out);
  add_structural(out);
  add_closed(out);
}

}  // namespace fibint::cat
