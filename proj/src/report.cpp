#include "fibint/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace fibint {

namespace {

std::string num17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string num_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string json_num(double v) { return std::isfinite(v) ? num17(v) : "null"; }

std::string json_str(const std::string& s) { return nlohmann::json(s).dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string json_assignment(const Assignment& a) {
  std::string out = "{";
  bool first = true;
  for (const auto& [k, v] : a) {
    if (!first) out += ",";
    first = false;
    out += json_str(k) + ":" + std::to_string(v);
  }
  return out + "}";
}

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    case Parity::any:
      break;
  }
  return "any";
}

std::string json_params(const std::vector<ParamSpec>& ps) {
  std::string out = "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const ParamSpec& p = ps[i];
    if (i) out += ",";
    out += "{\"name\":" + json_str(p.name) + ",\"parity\":\"" + parity_name(p.parity) +
           "\",\"min\":" + std::to_string(p.min) + ",\"max\":" + std::to_string(p.max) +
           ",\"exclusions\":[";
    for (std::size_t j = 0; j < p.exclusions.size(); ++j) {
      if (j) out += ",";
      out += std::to_string(p.exclusions[j]);
    }
    out += "]}";
  }
  return out + "]";
}

std::string describe_params(const std::vector<ParamSpec>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += "; ";
    out += ps[i].describe();
  }
  return out;
}

std::string report_json(const Report& r, const ReportMeta& meta) {
  std::ostringstream os;
  os << "{\"meta\":{\"tol\":" << (meta.tol ? json_num(*meta.tol) : "null")
     << ",\"filter\":" << json_str(meta.filter) << ",\"timestamp\":" << json_str(meta.timestamp)
     << "},\"results\":[";
  for (std::size_t i = 0; i < r.results.size(); ++i) {
    const VerificationResult& v = r.results[i];
    if (i) os << ",";
    os << "\n{\"id\":" << json_str(v.case_id) << ",\"params\":" << json_assignment(v.assignment)
       << ",\"lhs\":" << json_num(v.lhs) << ",\"rhs\":" << json_num(v.rhs)
       << ",\"abs_err\":" << json_num(v.abs_err) << ",\"tol\":" << json_num(v.tol)
       << ",\"passed\":" << (v.passed ? "true" : "false") << ",\"note\":" << json_str(v.note) << "}";
  }
  os << "\n]}\n";
  return os.str();
}

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "id,params,lhs,rhs,abs_err,tol,passed,note\n";
  for (const VerificationResult& v : r.results) {
    os << csv_field(v.case_id) << "," << csv_field(format_assignment(v.assignment)) << ","
       << num17(v.lhs) << "," << num17(v.rhs) << "," << num17(v.abs_err) << "," << num17(v.tol)
       << "," << (v.passed ? "true" : "false") << "," << csv_field(v.note) << "\n";
  }
  return os.str();
}

std::string report_md(const Report& r, const ReportMeta& meta) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "- filter: `" << meta.filter << "`\n";
  os << "- tol: " << (meta.tol ? num17(*meta.tol) : std::string("case default")) << "\n";
  os << "- timestamp: " << meta.timestamp << "\n";
  os << "- passed: " << r.n_pass << " / " << r.results.size() << "\n\n";
  os << "| id | params | lhs | rhs | abs_err | tol | passed | note |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const VerificationResult& v : r.results) {
    os << "| " << md_cell(v.case_id) << " | " << md_cell(format_assignment(v.assignment)) << " | "
       << num17(v.lhs) << " | " << num17(v.rhs) << " | " << num17(v.abs_err) << " | "
       << num17(v.tol) << " | " << (v.passed ? "yes" : "no") << " | " << md_cell(v.note) << " |\n";
  }
  return os.str();
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "md") return ReportFormat::md;
  throw std::invalid_argument("unknown format: " + s);
}

std::string render_report(const Report& r, const ReportMeta& meta, ReportFormat f) {
  switch (f) {
    case ReportFormat::json:
      return report_json(r, meta);
    case ReportFormat::csv:
      return report_csv(r);
    case ReportFormat::md:
      break;
  }
  return report_md(r, meta);
}

std::string render_catalog(const std::vector<IdentityCase>& cases, ReportFormat f) {
  std::ostringstream os;
  switch (f) {
    case ReportFormat::json:
      os << "[";
      for (std::size_t i = 0; i < cases.size(); ++i) {
        const IdentityCase& c = cases[i];
        if (i) os << ",";
        os << "\n{\"id\":" << json_str(c.id) << ",\"anchor\":" << json_str(c.anchor)
           << ",\"params\":" << json_params(c.params)
           << ",\"strategy\":" << json_str(c.strategy.describe())
           << ",\"default_tol\":" << json_num(c.default_tol) << "}";
      }
      os << "\n]\n";
      break;
    case ReportFormat::csv:
      os << "id,anchor,params,strategy,default_tol\n";
      for (const IdentityCase& c : cases)
        os << csv_field(c.id) << "," << csv_field(c.anchor) << ","
           << csv_field(describe_params(c.params)) << "," << csv_field(c.strategy.describe())
           << "," << num_short(c.default_tol) << "\n";
      break;
    case ReportFormat::md:
      os << "| id | anchor | params | strategy |\n|---|---|---|---|\n";
      for (const IdentityCase& c : cases)
        os << "| " << md_cell(c.id) << " | " << md_cell(c.anchor) << " | "
           << md_cell(describe_params(c.params)) << " | " << md_cell(c.strategy.describe())
           << " |\n";
      break;
  }
  return os.str();
}

std::string render_case(const IdentityCase& c, ReportFormat f) {
  std::ostringstream os;
  if (f == ReportFormat::json) {
    os << "{\"id\":" << json_str(c.id) << ",\"anchor\":" << json_str(c.anchor)
       << ",\"params\":" << json_params(c.params)
       << ",\"strategy\":" << json_str(c.strategy.describe())
       << ",\"default_tol\":" << json_num(c.default_tol) << ",\"quad_tol\":" << json_num(c.quad_tol)
       << ",\"grid_size\":" << default_grid(c).size() << ",\"note\":" << json_str(c.note) << "}\n";
    return os.str();
  }
  os << "id:          " << c.id << "\n";
  os << "anchor:      " << c.anchor << "\n";
  os << "params:      " << (c.params.empty() ? "none" : describe_params(c.params)) << "\n";
  os << "strategy:    " << c.strategy.describe() << "\n";
  os << "default_tol: " << num_short(c.default_tol) << "\n";
  os << "quad_tol:    " << num_short(c.quad_tol) << "\n";
  os << "grid size:   " << default_grid(c).size() << "\n";
  if (!c.note.empty()) os << "note:        " << c.note << "\n";
  return os.str();
}

int verify_exit_code(const Report& r) {
  for (const VerificationResult& v : r.results)
    if (!v.passed) return 1;
  return 0;
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace fibint
