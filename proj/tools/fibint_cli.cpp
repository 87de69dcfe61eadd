#include "fibint/registry.hpp"
#include "fibint/report.hpp"
#include "fibint/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;

fibint::GridOverride parse_grid(const std::vector<std::string>& specs) {
  static const std::regex item(R"(\s*([rnmk])\s*=\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  fibint::GridOverride out;
  for (const std::string& spec : specs) {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      const std::size_t comma = spec.find(',', pos);
      const std::string part = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      std::smatch m;
      if (!std::regex_match(part, m, item))
        throw std::invalid_argument("bad grid override '" + part + "', expected name=lo..hi");
      const long lo = std::stol(m[2]), hi = std::stol(m[3]);
      if (lo > hi) throw std::invalid_argument("empty grid range '" + part + "'");
      out[m[1]] = {lo, hi};
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << text;
  if (!f) throw std::runtime_error("cannot write output file " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of Fibonacci and Lucas integral identities"};
  app.require_subcommand(1);

  std::string filter = "*";
  std::string format = "md";
  std::string out_path;
  std::string show_id;
  std::optional<double> tol;
  std::vector<std::string> grid_specs;

  CLI::App* list = app.add_subcommand("list", "List catalog entries");
  list->add_option("--filter", filter, "Glob over case ids");
  list->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  list->add_option("--out", out_path, "Write to file instead of stdout");

  CLI::App* show = app.add_subcommand("show", "Show full metadata of one case");
  show->add_option("id", show_id, "Case id")->required();
  show->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));

  CLI::App* verify = app.add_subcommand("verify", "Verify catalog instances");
  verify->add_option("--filter", filter, "Glob over case ids");
  verify->add_option("--tol", tol, "Absolute tolerance override in [1e-13, 1e-3]")
      ->check(CLI::Range(fibint::kMinQuadTol, fibint::kMaxQuadTol));
  verify->add_option("--format", format, "json, csv or md")->check(CLI::IsMember({"json", "csv", "md"}));
  verify->add_option("--out", out_path, "Write to file instead of stdout");
  verify->add_option("--grid", grid_specs, "Parameter range override, e.g. r=2..6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const fibint::ReportFormat fmt = fibint::parse_format(format);
    if (*list) {
      std::vector<fibint::IdentityCase> rows;
      for (const fibint::IdentityCase& c : fibint::catalog())
        if (fibint::glob_match(filter, c.id)) rows.push_back(c);
      if (rows.empty()) throw std::invalid_argument("filter matches no catalog id: " + filter);
      emit(fibint::render_catalog(rows, fmt), out_path);
      return 0;
    }
    if (*show) {
      emit(fibint::render_case(fibint::find_case(show_id), fmt), "");
      return 0;
    }
    std::optional<fibint::GridOverride> grid;
    if (!grid_specs.empty()) grid = parse_grid(grid_specs);
    const fibint::Report rep = fibint::run(filter, grid, tol);
    emit(fibint::render_report(rep, {tol, filter, fibint::utc_timestamp()}, fmt), out_path);
    std::cerr << rep.n_pass << " passed, " << rep.n_fail << " failed in " << rep.wall_time.count()
              << " s\n";
    return fibint::verify_exit_code(rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
