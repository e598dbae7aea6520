#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsv/expr.hpp"
#include "qsv/series.hpp"
#include "qsv/theta.hpp"

namespace qsv {

/// One parameter-closed identity from the catalogue.
///
/// Both sides are compared after multiplying by `normalizer`, a monomial that
/// clears fractional z and q offsets. Two-variable identities are stored with
/// their poles already cleared; `cleared_by` names the factor used.
struct IdentityCheck {
  std::string id;
  std::string anchor;
  Expr lhs;
  Expr rhs;
  Exponent default_order = 200;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> tags;
  Expr normalizer = Expr::constant(1);
  std::string cleared_by;

  bool has_tag(const std::string& tag) const;
};

/// A single-coefficient perturbation added to the normalized right-hand side.
struct Perturbation {
  GaussianRational coeff;
  Exponent q;
  Exponent z = 0;
};

struct CheckReport {
  std::string id;
  std::string anchor;
  Status status = Status::pass;
  /// The order to which both sides were compared and agree.
  Exponent verified_order = 0;
  std::optional<FirstDifference> first_difference;
  double wall_time_ms = 0;
  std::string reason;
};

struct SuiteSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
  /// Smallest verified order over the non-skipped checks.
  std::optional<Exponent> common_order;
};

struct SuiteReport {
  std::vector<CheckReport> checks;
  SuiteSummary summary;
};

struct RunOptions {
  /// Overrides every check's default order when set.
  std::optional<Exponent> order;
  /// Record wall times; off gives byte-stable reports.
  bool timing = true;
  std::optional<Perturbation> perturbation;
};

/// Builds the full catalogue; ids are unique.
std::vector<IdentityCheck> register_builtin_catalogue();
/// The catalogue built once per process.
const std::vector<IdentityCheck>& builtin_catalogue();
/// Looks up an id; nullptr when absent.
const IdentityCheck* find_check(const std::string& id);

/// Shell-style glob: `*`, `?` and bracket classes. An empty pattern matches everything.
bool glob_match(const std::string& pattern, const std::string& text);

CheckReport run_check(const IdentityCheck& check, const RunOptions& options = {});
/// Throws UnknownName for an unregistered id.
CheckReport run_check(const std::string& id, const RunOptions& options = {});

/// Runs the checks on `threads` workers; report order follows the input order.
SuiteReport run_checks(const std::vector<IdentityCheck>& checks, const RunOptions& options, unsigned threads);
/// Runs every catalogue check whose id matches `filter`.
SuiteReport run_suite(const std::string& filter, const RunOptions& options, unsigned threads);

SuiteSummary summarize(const std::vector<CheckReport>& reports);

}  // namespace qsv
