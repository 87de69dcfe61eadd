#pragma once

// Catalog of definite-integral identities: parameter domains, integrand
// builders, closed-form right-hand sides and integration strategy.

#include "fibint/quad.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibint {

enum class Parity { any, even, odd };

struct ParamSpec {
  std::string name;  // one of r, n, m, k
  Parity parity = Parity::any;
  long min = 0;
  long max = 0;
  std::vector<long> exclusions;

  bool admits(long v) const;
  /// Human-readable form, e.g. "r odd in [1, 9] except {1}".
  std::string describe() const;
};

enum class StrategyKind { finite, half_line, tan_halfpi };

struct Strategy {
  StrategyKind kind = StrategyKind::finite;
  double a = 0.0;  // finite only
  double b = 0.0;

  std::string describe() const;
};

/// Integer parameter values keyed by name.
using Assignment = std::map<std::string, long>;

/// Read-only view of an assignment used by the builders.
struct Params {
  long r = 0;
  long n = 0;
  long m = 0;
  long k = 0;

  static Params from(const Assignment& a);
};

using LhsBuilder = std::function<Integrand(const Params&)>;
using RhsEval = std::function<double(const Params&)>;

struct IdentityCase {
  std::string id;
  std::string anchor;
  std::vector<ParamSpec> params;
  Strategy strategy;
  LhsBuilder lhs_builder;
  RhsEval rhs_eval;
  double default_tol = 1e-7;
  /// Absolute tolerance requested from the quadrature.
  double quad_tol = 1e-10;
  /// Free-form metadata: parameterization of continuous arguments, corrected
  /// misprints, structural checks.
  std::string note;
};

struct BoundInstance {
  std::string case_id;
  Assignment assignment;
  Strategy strategy;
  Integrand integrand;
  double rhs = 0.0;
  double tol = 0.0;
  double quad_tol = 0.0;
  std::string note;
};

class UnknownCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Full catalog, built once. Order is by id.
const std::vector<IdentityCase>& catalog();

/// Throws UnknownCase.
const IdentityCase& find_case(std::string_view id);

/// Binds an assignment. Throws UnknownCase, or ParameterError naming the
/// parameter spec that is violated (missing, extra, parity, range, excluded).
BoundInstance instantiate(std::string_view id, const Assignment& assignment);
BoundInstance instantiate(const IdentityCase& c, const Assignment& assignment);

/// Cross product of every parameter's admissible values, lexicographic in
/// parameter order. A case without parameters yields one empty assignment.
std::vector<Assignment> default_grid(std::string_view id);
std::vector<Assignment> default_grid(const IdentityCase& c);

/// "n=2,r=3" (names in lexicographic order); empty for no parameters.
std::string format_assignment(const Assignment& a);

/// Shell-style glob with * and ?.
bool glob_match(std::string_view pattern, std::string_view text);

}  // namespace fibint
