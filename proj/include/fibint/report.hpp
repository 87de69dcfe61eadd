#pragma once

// Serialization of verification reports and catalog listings.

#include "fibint/registry.hpp"
#include "fibint/verifier.hpp"

#include <optional>
#include <string>

namespace fibint {

enum class ReportFormat { json, csv, md };

/// Throws std::invalid_argument for anything but json, csv or md.
ReportFormat parse_format(const std::string& s);

struct ReportMeta {
  std::optional<double> tol;
  std::string filter;
  std::string timestamp;
};

/// Floats use 17 significant digits; non-finite values become null in JSON
/// and nan/inf in CSV and Markdown.
std::string render_report(const Report& r, const ReportMeta& meta, ReportFormat f);

std::string render_catalog(const std::vector<IdentityCase>& cases, ReportFormat f);

/// Full metadata of one case, as JSON or text.
std::string render_case(const IdentityCase& c, ReportFormat f);

/// Command-line exit status for a finished verification: 0 when every
/// instance passed, 1 otherwise.
int verify_exit_code(const Report& r);

/// UTC time in ISO 8601.
std::string utc_timestamp();

}  // namespace fibint
