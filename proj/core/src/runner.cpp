#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "qsv/errors.hpp"
#include "qsv/registry.hpp"

namespace qsv {

bool IdentityCheck::has_tag(const std::string& tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool glob_match(const std::string& pattern, const std::string& text) {
  if (pattern.empty()) return true;
  return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

const std::vector<IdentityCheck>& builtin_catalogue() {
  static const std::vector<IdentityCheck> catalogue = register_builtin_catalogue();
  return catalogue;
}

const IdentityCheck* find_check(const std::string& id) {
  for (const auto& c : builtin_catalogue()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CheckReport run_check(const IdentityCheck& check, const RunOptions& options) {
  CheckReport report;
  report.id = check.id;
  report.anchor = check.anchor;
  const Exponent order = options.order ? *options.order : check.default_order;
  const auto start = std::chrono::steady_clock::now();
  try {
    QZSeries lhs = (check.normalizer * check.lhs).eval(order);
    Expr rhs_expr = check.normalizer * check.rhs;
    if (options.perturbation) {
      const auto& p = *options.perturbation;
      rhs_expr = rhs_expr + Expr::monomial(p.coeff, p.q, p.z);
    }
    QZSeries rhs = rhs_expr.eval(order);
    Comparison cmp = equal_up_to(lhs, rhs, order);
    if (cmp.equal) {
      report.status = Status::pass;
      report.verified_order = order;
    } else {
      report.status = Status::fail;
      report.first_difference = cmp.first_difference;
      report.verified_order = cmp.first_difference->q;
    }
  } catch (const IntegralityViolation& e) {
    report.status = Status::fail;
    report.reason = e.what();
  } catch (const Error& e) {
    report.status = Status::skipped;
    report.reason = e.what();
  }
  if (options.timing) {
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

CheckReport run_check(const std::string& id, const RunOptions& options) {
  const IdentityCheck* c = find_check(id);
  if (c == nullptr) throw UnknownName("no check with id '" + id + "'");
  return run_check(*c, options);
}

SuiteSummary summarize(const std::vector<CheckReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::pass:
        ++s.pass;
        break;
      case Status::fail:
        ++s.fail;
        break;
      case Status::skipped:
        ++s.skipped;
        continue;
    }
    if (!s.common_order || r.verified_order < *s.common_order) s.common_order = r.verified_order;
  }
  return s;
}

SuiteReport run_checks(const std::vector<IdentityCheck>& checks, const RunOptions& options, unsigned threads) {
  SuiteReport out;
  out.checks.resize(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) out.checks[i] = run_check(checks[i], options);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  out.summary = summarize(out.checks);
  return out;
}

SuiteReport run_suite(const std::string& filter, const RunOptions& options, unsigned threads) {
  std::vector<IdentityCheck> selected;
  for (const auto& c : builtin_catalogue()) {
    if (glob_match(filter, c.id)) selected.push_back(c);
  }
  return run_checks(selected, options, threads);
}

}  // namespace qsv
