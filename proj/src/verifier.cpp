#include "fibint/verifier.hpp"

#include "fibint/fib_complex.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

namespace fibint {

namespace {

QuadResult integrate(const BoundInstance& inst, double tol) {
  switch (inst.strategy.kind) {
    case StrategyKind::finite:
      return integrate_finite(inst.integrand, inst.strategy.a, inst.strategy.b, tol);
    case StrategyKind::half_line:
      return integrate_half_line(inst.integrand, tol);
    case StrategyKind::tan_halfpi:
      return integrate_tan_halfpi(inst.integrand, tol);
  }
  throw std::logic_error("unknown strategy");
}

void append_note(std::string& note, const std::string& extra) {
  if (!note.empty()) note += "; ";
  note += extra;
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FIBINT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) n = static_cast<unsigned>(v);
  }
  return n;
}

void check_tol(double tol) {
  if (!(tol >= kMinQuadTol && tol <= kMaxQuadTol))
    throw std::invalid_argument("tolerance must lie in [1e-13, 1e-3]");
}

}  // namespace

VerificationResult verify_instance(const BoundInstance& inst) {
  VerificationResult out;
  out.case_id = inst.case_id;
  out.assignment = inst.assignment;
  out.tol = inst.tol;
  out.note = inst.note;
  out.rhs = std::nan("");
  out.lhs = std::nan("");
  out.abs_err = std::nan("");
  try {
    const double qtol = std::clamp(std::min(inst.quad_tol, 0.1 * inst.tol), kMinQuadTol, kMaxQuadTol);
    const QuadResult q = integrate(inst, qtol);
    out.lhs = q.value;
    out.quad_evals = q.evals;
    out.converged = q.converged;
    out.rhs = inst.rhs;
    if (!q.converged) append_note(out.note, "quadrature did not converge");
    if (!std::isfinite(out.rhs)) append_note(out.note, "right-hand side is not finite");
    out.abs_err = std::fabs(out.lhs - out.rhs);
    const double threshold = std::max(out.tol, kVerifyRelTol * std::fabs(out.rhs));
    out.passed = q.converged && std::isfinite(out.lhs) && std::isfinite(out.rhs) &&
                 out.abs_err <= threshold;
  } catch (const std::exception& e) {
    append_note(out.note, std::string("evaluation error: ") + e.what());
    out.passed = false;
  }
  return out;
}

std::vector<Assignment> effective_grid(const IdentityCase& c, const GridOverride& grid) {
  std::vector<Assignment> out;
  std::vector<std::vector<long>> values;
  for (const ParamSpec& p : c.params) {
    std::vector<long> vs;
    long lo = p.min, hi = p.max;
    if (auto it = grid.find(p.name); it != grid.end()) {
      lo = it->second.first;
      hi = it->second.second;
    }
    for (long v = lo; v <= hi; ++v)
      if (p.admits(v)) vs.push_back(v);
    if (vs.empty()) return {};
    values.push_back(std::move(vs));
  }
  std::vector<std::size_t> idx(values.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < values.size(); ++i) a[c.params[i].name] = values[i][idx[i]];
    out.push_back(std::move(a));
    std::size_t i = values.size();
    while (i > 0) {
      --i;
      if (++idx[i] < values[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (values.empty()) return out;
  }
}

Report run(const std::string& filter, const std::optional<GridOverride>& grid,
           std::optional<double> tol) {
  if (tol) check_tol(*tol);
  const auto start = std::chrono::steady_clock::now();

  std::vector<BoundInstance> work;
  bool matched = false;
  for (const IdentityCase& c : catalog()) {
    if (!glob_match(filter, c.id)) continue;
    matched = true;
    const std::vector<Assignment> assignments = grid ? effective_grid(c, *grid) : default_grid(c);
    if (assignments.empty())
      throw std::invalid_argument("grid override leaves no admissible value for " + c.id);
    for (const Assignment& a : assignments) {
      BoundInstance inst = instantiate(c, a);
      if (tol) inst.tol = *tol;
      work.push_back(std::move(inst));
    }
  }
  if (!matched) throw std::invalid_argument("filter matches no catalog id: " + filter);

  Report rep;
  rep.results.resize(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) rep.results[i] = verify_instance(work[i]);
  };
  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::size_t>(thread_cap(), std::max<std::size_t>(1, work.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const VerificationResult& a, const VerificationResult& b) {
                     if (a.case_id != b.case_id) return a.case_id < b.case_id;
                     return a.assignment < b.assignment;
                   });
  for (const VerificationResult& r : rep.results) (r.passed ? rep.n_pass : rep.n_fail)++;
  rep.wall_time = std::chrono::steady_clock::now() - start;
  return rep;
}

std::vector<Lemma2Residual> lemma2_check(int j_lo, int j_hi, double h) {
  if (!(h >= 1e-7 && h <= 1e-3)) throw std::invalid_argument("h must lie in [1e-7, 1e-3]");
  std::vector<Lemma2Residual> out;
  for (int j = j_lo; j <= j_hi; ++j) {
    const double x = j;
    const ComplexVal df = (fib_fn(x + h) - fib_fn(x - h)) / (2.0 * h);
    const ComplexVal dl = (lucas_fn(x + h) - lucas_fn(x - h)) / (2.0 * h);
    out.push_back({j, std::abs(df - fib_fn_deriv(x)), std::abs(dl - lucas_fn_deriv(x))});
  }
  return out;
}

}  // namespace fibint
