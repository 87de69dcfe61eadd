#include "fibint/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fibint {

namespace {

// Integrand seen by the panel integrator: f(x, x - a, b - x), with both
// endpoint distances computed without cancellation.
using Kernel = std::function<double(double, double, double)>;

constexpr int kTableLevels = 14;
// Nodes closer to an endpoint than this fraction of the half width are dropped.
constexpr double kMinComplement = 1e-20;

struct Node {
  double comp;    // 1 - tanh(pi/2 sinh t), distance to the nearer endpoint / half width
  double weight;  // (pi/2) cosh t / cosh^2(pi/2 sinh t)
};

struct Abscissae {
  std::vector<std::vector<Node>> levels;  // levels[0] holds t = 0, 1, 2, ...
};

Node make_node(double t) {
  const double s = std::numbers::pi / 2.0 * std::sinh(t);
  const double e = std::exp(-2.0 * s);
  const double comp = 2.0 * e / (1.0 + e);
  const double weight = std::numbers::pi / 2.0 * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
  return {comp, weight};
}

const Abscissae& abscissae() {
  static const Abscissae table = [] {
    Abscissae out;
    out.levels.resize(kTableLevels + 1);
    for (int t = 0;; ++t) {
      const Node n = make_node(t);
      if (n.comp < kMinComplement) break;
      out.levels[0].push_back(n);
    }
    for (int k = 1; k <= kTableLevels; ++k) {
      const double h = std::ldexp(1.0, -k);
      for (long j = 0;; ++j) {
        const Node n = make_node(static_cast<double>(2 * j + 1) * h);
        if (n.comp < kMinComplement) break;
        out.levels[k].push_back(n);
      }
    }
    return out;
  }();
  return table;
}

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

struct Panel {
  const Kernel& f;
  double a;
  double b;
  long evals = 0;
  bool finite = true;
  CompensatedSum sum;
  CompensatedSum abs_sum;

  void add(double weight, double x, double dl, double dr) {
    const double y = f(x, dl, dr);
    ++evals;
    if (!std::isfinite(y)) {
      finite = false;
      return;
    }
    sum.add(weight * y);
    abs_sum.add(weight * std::abs(y));
  }

  void add_level(const std::vector<Node>& nodes, bool include_center) {
    const double hw = (b - a) / 2.0;
    const double width = b - a;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      const double d = hw * n.comp;
      if (include_center && i == 0) {
        add(n.weight, a + hw, hw, hw);
        continue;
      }
      const double xl = a + d;
      if (xl > a) add(n.weight, xl, d, width - d);
      const double xr = b - d;
      if (xr < b) add(n.weight, xr, width - d, d);
    }
  }
};

QuadResult tanh_sinh_panel(const Kernel& f, double a, double b, double target,
                           const QuadOptions& opts, int depth) {
  const auto& table = abscissae();
  const int max_levels = std::clamp(opts.max_levels, 1, kTableLevels);
  const double hw = (b - a) / 2.0;

  Panel panel{f, a, b, 0, true, {}, {}};
  panel.add_level(table.levels[0], true);
  double prev = hw * panel.sum.value();
  QuadResult res;
  bool done = false;
  for (int k = 1; k <= max_levels && panel.finite; ++k) {
    panel.add_level(table.levels[k], false);
    const double h = std::ldexp(1.0, -k);
    const double value = hw * h * panel.sum.value();
    const double l1 = hw * h * panel.abs_sum.value();
    res.value = value;
    res.err_est = std::abs(value - prev);
    prev = value;
    if (k >= 3 && res.err_est <= std::max(target, opts.rel_tol * l1)) {
      done = true;
      break;
    }
  }
  res.evals = panel.evals;
  if (!panel.finite) {
    res.value = std::numeric_limits<double>::quiet_NaN();
    res.err_est = std::numeric_limits<double>::infinity();
    res.converged = false;
    return res;
  }
  if (done) {
    res.converged = true;
    return res;
  }
  if (depth >= opts.max_depth) return res;

  const double mid = a + hw;
  QuadResult left = tanh_sinh_panel(f, a, mid, target / 2.0, opts, depth + 1);
  QuadResult right = tanh_sinh_panel(f, mid, b, target / 2.0, opts, depth + 1);
  QuadResult out;
  out.value = left.value + right.value;
  out.err_est = left.err_est + right.err_est;
  out.evals = res.evals + left.evals + right.evals;
  out.converged = left.converged && right.converged;
  return out;
}

void check_tol(double tol) {
  if (!(tol >= kMinQuadTol && tol <= kMaxQuadTol)) {
    throw std::invalid_argument("quadrature tolerance must lie in [1e-13, 1e-3], got " +
                                std::to_string(tol));
  }
}

QuadResult integrate_kernel(const Kernel& f, double a, double b, double tol,
                            const std::vector<double>& splits, const QuadOptions& opts) {
  std::vector<double> cuts{a};
  std::vector<double> interior;
  for (double s : splits) {
    if (s > a && s < b) interior.push_back(s);
  }
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  cuts.insert(cuts.end(), interior.begin(), interior.end());
  cuts.push_back(b);

  const double piece_tol = tol / static_cast<double>(cuts.size() - 1);
  QuadResult total;
  total.converged = true;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    // Distances handed to the kernel are measured from the outer endpoints.
    const double off_lo = lo - a;
    const double off_hi = b - hi;
    Kernel piece = [&](double x, double dl, double dr) {
      return f(x, off_lo + dl, off_hi + dr);
    };
    const QuadResult r = tanh_sinh_panel(i == 0 && cuts.size() == 2 ? f : piece, lo, hi,
                                         piece_tol, opts, 0);
    total.value += r.value;
    total.err_est += r.err_est;
    total.evals += r.evals;
    total.converged = total.converged && r.converged;
  }
  return total;
}

}  // namespace

QuadResult integrate_finite(const Integrand& f, double a, double b, double tol,
                            const QuadOptions& opts) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate_finite: need finite a < b");
  }
  check_tol(tol);
  const Kernel k = [&](double x, double, double) { return f.eval(x); };
  return integrate_kernel(k, a, b, tol, f.singular_points, opts);
}

QuadResult integrate_half_line(const Integrand& f, double tol, const QuadOptions& opts) {
  check_tol(tol);
  // x = t / (1 - t), dx = dt / (1 - t)^2; 1 - t is the right-endpoint distance.
  const Kernel k = [&](double t, double, double one_minus_t) {
    const double x = t / one_minus_t;
    return f.eval(x) / (one_minus_t * one_minus_t);
  };
  std::vector<double> splits;
  for (double s : f.singular_points) {
    if (s > 0.0) splits.push_back(s / (1.0 + s));
  }
  return integrate_kernel(k, 0.0, 1.0, tol, splits, opts);
}

QuadResult integrate_tan_halfpi(const Integrand& g, double tol, const QuadOptions& opts) {
  Integrand h{[&](double t) { return g.eval(t) / (1.0 + t * t); }, g.singular_points};
  return integrate_half_line(h, tol, opts);
}

}  // namespace fibint
