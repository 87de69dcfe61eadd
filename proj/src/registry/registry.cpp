#include "catalog.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace fibint {

bool ParamSpec::admits(long v) const {
  if (v < min || v > max) return false;
  if (parity == Parity::even && v % 2 != 0) return false;
  if (parity == Parity::odd && v % 2 == 0) return false;
  return std::find(exclusions.begin(), exclusions.end(), v) == exclusions.end();
}

std::string ParamSpec::describe() const {
  std::ostringstream os;
  os << name;
  if (parity == Parity::even) os << " even";
  if (parity == Parity::odd) os << " odd";
  os << " in [" << min << ", " << max << "]";
  if (!exclusions.empty()) {
    os << " except {";
    for (std::size_t i = 0; i < exclusions.size(); ++i) os << (i ? ", " : "") << exclusions[i];
    os << "}";
  }
  return os.str();
}

std::string Strategy::describe() const {
  switch (kind) {
    case StrategyKind::half_line:
      return "HALF_LINE";
    case StrategyKind::tan_halfpi:
      return "TAN_HALFPI";
    case StrategyKind::finite:
      break;
  }
  auto fmt = [](double v) {
    if (v == 0.0) return std::string("0");
    const double ratio = v / std::numbers::pi;
    for (int d : {1, 2, 4}) {
      if (std::abs(ratio * d - std::round(ratio * d)) < 1e-12) {
        const long num = std::lround(ratio * d);
        std::string s = num == 1 ? "pi" : std::to_string(num) + "pi";
        return d == 1 ? s : s + "/" + std::to_string(d);
      }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  return "FINITE(" + fmt(a) + "," + fmt(b) + ")";
}

Params Params::from(const Assignment& a) {
  Params p;
  for (const auto& [name, v] : a) {
    if (name == "r") p.r = v;
    else if (name == "n") p.n = v;
    else if (name == "m") p.m = v;
    else if (name == "k") p.k = v;
  }
  return p;
}

const std::vector<IdentityCase>& catalog() {
  static const std::vector<IdentityCase> all = [] {
    cat::Cases out;
    cat::add_lewin(out);
    cat::add_s1_s3(out);
    cat::add_s4_s5(out);
    cat::add_s6_s7(out);
    cat::add_s8_s9(out);
    cat::add_s10(out);
    std::sort(out.begin(), out.end(),
              [](const IdentityCase& x, const IdentityCase& y) { return x.id < y.id; });
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (out[i].id == out[i - 1].id) throw std::logic_error("duplicate catalog id " + out[i].id);
    }
    return out;
  }();
  return all;
}

const IdentityCase& find_case(std::string_view id) {
  const auto& all = catalog();
  auto it = std::lower_bound(all.begin(), all.end(), id,
                             [](const IdentityCase& c, std::string_view v) { return c.id < v; });
  if (it == all.end() || it->id != id) throw UnknownCase("unknown identity id: " + std::string(id));
  return *it;
}

BoundInstance instantiate(std::string_view id, const Assignment& assignment) {
  return instantiate(find_case(id), assignment);
}

BoundInstance instantiate(const IdentityCase& c, const Assignment& assignment) {
  for (const auto& [name, v] : assignment) {
    const bool known = std::any_of(c.params.begin(), c.params.end(),
                                   [&](const ParamSpec& p) { return p.name == name; });
    if (!known) throw ParameterError(c.id + ": unexpected parameter " + name);
  }
  for (const auto& p : c.params) {
    auto it = assignment.find(p.name);
    if (it == assignment.end()) {
      throw ParameterError(c.id + ": missing parameter " + p.name + " (" + p.describe() + ")");
    }
    if (!p.admits(it->second)) {
      throw ParameterError(c.id + ": " + p.name + "=" + std::to_string(it->second) +
                           " violates " + p.describe());
    }
  }
  const Params params = Params::from(assignment);
  BoundInstance b;
  b.case_id = c.id;
  b.assignment = assignment;
  b.strategy = c.strategy;
  b.integrand = c.lhs_builder(params);
  b.rhs = c.rhs_eval(params);
  b.tol = c.default_tol;
  b.quad_tol = c.quad_tol;
  b.note = c.note;
  return b;
}

std::vector<Assignment> default_grid(std::string_view id) { return default_grid(find_case(id)); }

std::vector<Assignment> default_grid(const IdentityCase& c) {
  std::vector<Assignment> out{Assignment{}};
  for (const auto& p : c.params) {
    std::vector<Assignment> next;
    for (const auto& partial : out) {
      for (long v = p.min; v <= p.max; ++v) {
        if (!p.admits(v)) continue;
        Assignment a = partial;
        a[p.name] = v;
        next.push_back(std::move(a));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string format_assignment(const Assignment& a) {
  std::string out;
  for (const auto& [name, v] : a) {
    if (!out.empty()) out += ",";
    out += name + "=" + std::to_string(v);
  }
  return out;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

}  // namespace fibint
