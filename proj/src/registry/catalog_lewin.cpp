#include "catalog.hpp"

namespace fibint::cat {

namespace {

// q = alpha^r covers both alpha^|r| and -beta^|r| for odd r.
const char* kAlphaGrid = "q = alpha^r";
const char* kBetaGrid = "q = beta^r";

}  // namespace

void add_lewin(Cases& out) {
  out.push_back(make(
      "LEWIN.E7", "eq. (nx3w40i) int_0^{pi/2} Li2(-q^2 tan^2 x) dx = 2 pi Li2(-q)", tan_halfpi(),
      {p_any("r", -4, 4)},
      [](const Params& p) {
        const double q2 = apow(2 * p.r);
        return plain([q2](double t) { return li2(-q2 * t * t); });
      },
      [](const Params& p) { return 2.0 * pi * li2(-apow(p.r)); }, kAlphaGrid));

  out.push_back(make(
      "LEWIN.E8", "eq. (yjqd44q) int_0^inf arctan(qx)/(1+x^2) dx", half_line(), {p_any("r", -4, 4)},
      [](const Params& p) {
        const double q = apow(p.r);
        return plain([q](double x) { return std::atan(q * x) / (1.0 + x * x); });
      },
      [](const Params& p) {
        const double q = apow(p.r);
        const double u = (1.0 - q) / (1.0 + q);
        return pi * pi / 8.0 - 0.5 * li2(u) + 0.5 * li2(-u);
      },
      kAlphaGrid));

  out.push_back(make(
      "LEWIN.E9", "eq. (qk18ai6) int_0^{pi/2} arctan(Q csc x) dx", finite(0.0, pi / 2.0),
      {p_any("r", -4, 4)},
      [](const Params& p) {
        const double q = apow(p.r);
        return plain([q](double x) { return std::atan(q / std::sin(x)); });
      },
      [](const Params& p) {
        const double q = apow(p.r);
        const double w = std::sqrt(1.0 + q * q) - q;
        return pi * pi / 4.0 - li2(w) + li2(-w);
      },
      "Q = alpha^r"));

  out.push_back(make(
      "LEWIN.E10", "eq. (sjcljni) int_0^pi x arctan(2q sin x / (1 - q^2)) dx", finite(0.0, pi),
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = bpow(p.r);
        const double c = 2.0 * q / (1.0 - q * q);
        return plain([c](double x) { return x * std::atan(c * std::sin(x)); });
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        return pi * (li2(q) - li2(-q));
      },
      kBetaGrid));

  out.push_back(make(
      "LEWIN.E11", "eq. (11) int_0^{pi/2} x^2/(1 - Q cos 2x) dx, Q = 2q/(1+q^2)",
      finite(0.0, pi / 2.0), {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = bpow(p.r);
        const double Q = 2.0 * q / (1.0 + q * q);
        return plain([Q](double x) { return x * x / (1.0 - Q * std::cos(2.0 * x)); });
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        return (1.0 + q * q) / (1.0 - q * q) * (pi * pi * pi / 24.0 + pi / 2.0 * li2(-q));
      },
      kBetaGrid));

  out.push_back(make(
      "LEWIN.E12", "eq. (n71rwsq) int_0^pi x^2/(1 - Q cos^2 x) dx, Q = 4q/(1+q)^2",
      finite(0.0, pi), {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = bpow(p.r);
        const double Q = 4.0 * q / ((1.0 + q) * (1.0 + q));
        return plain([Q](double x) {
          const double c = std::cos(x);
          return x * x / (1.0 - Q * c * c);
        });
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        return (1.0 + q) / (1.0 - q) * (pi * pi * pi / 3.0 + pi * li2(q));
      },
      kBetaGrid));

  out.push_back(make(
      "LEWIN.E13", "eq. (lh0gp48) int_0^pi x^2/(1 - Q cos 2x) dx, Q = 2q/(1+q^2)", finite(0.0, pi),
      {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = bpow(p.r);
        const double Q = 2.0 * q / (1.0 + q * q);
        return plain([Q](double x) { return x * x / (1.0 - Q * std::cos(2.0 * x)); });
      },
      [](const Params& p) {
        const double q = bpow(p.r);
        return (1.0 + q * q) / (1.0 - q * q) * (pi * pi * pi / 3.0 + pi * li2(q));
      },
      kBetaGrid));

  out.push_back(make(
      "LEWIN.E14", "eq. (b1e7nal) int_0^pi x^2 cos x/(1 - Q cos 2x) dx, Q = 2q/(1+q^2)",
      finite(0.0, pi), {p_any("r", 1, 6)},
      [](const Params& p) {
        const double q = apow(-p.r);
        const double Q = 2.0 * q / (1.0 + q * q);
        return plain([Q](double x) { return x * x * std::cos(x) / (1.0 - Q * std::cos(2.0 * x)); });
      },
      [](const Params& p) {
        const double q = apow(-p.r);
        const double s = std::sqrt(q);
        return -pi * (1.0 + q * q) / (1.0 - q) * (li2(s) - li2(-s)) / s;
      },
      "q = (-beta)^r"));
}

}  // namespace fibint::cat
