// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero on any failure.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "qsv/errors.hpp"
#include "qsv/hecke.hpp"
#include "qsv/mock_theta.hpp"
#include "qsv/registry.hpp"
#include "report.hpp"

using namespace qsv;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
};

bool failed_any = false;

void emit(int n, const std::string& title, const Outcome& o) {
  failed_any = failed_any || !o.ok;
  std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << n << ": " << title << " -- " << o.detail.str()
            << std::endl;
}

std::vector<IdentityCheck> select(const std::string& filter) {
  std::vector<IdentityCheck> out;
  for (const auto& c : builtin_catalogue()) {
    if (glob_match(filter, c.id)) out.push_back(c);
  }
  return out;
}

bool is_p5_family(const IdentityCheck& c) {
  return c.id.find("pP5") != std::string::npos || c.id.find("p=5") != std::string::npos;
}

/// Either side carries z below q^10.
bool is_two_variable(const IdentityCheck& c) {
  for (const Expr& side : {c.lhs, c.rhs}) {
    try {
      if (!(c.normalizer * side).eval(10).is_one_variable()) return true;
    } catch (const Error&) {
    }
  }
  return false;
}

/// Every report passes; the first offender is named otherwise.
void require_all_pass(const SuiteReport& r, std::size_t expected, Outcome& o) {
  if (r.checks.size() != expected || r.summary.pass != expected) o.ok = false;
  o.detail << r.summary.pass << "/" << r.checks.size() << " pass";
  for (const auto& c : r.checks) {
    if (c.status != Status::pass) {
      o.detail << "; first offender " << c.id << " (" << to_string(c.status) << ")";
      break;
    }
  }
}

}  // namespace

int main() {
  const auto& catalogue = builtin_catalogue();
  RunOptions stable;
  stable.timing = false;

  // 1 and 8 share two full runs: threads 8 first, then a cold-cache single-threaded run.
  const unsigned wide = 8;
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteReport full = run_suite("", stable, wide);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  {
    Outcome o;
    o.ok = full.summary.fail == 0 && full.summary.skipped == 0 && seconds < 600;
    std::size_t below_floor = 0;
    std::string first_low;
    for (std::size_t k = 0; k < catalogue.size(); ++k) {
      const IdentityCheck& c = catalogue[k];
      const Exponent floor = is_p5_family(c) ? 40 : (is_two_variable(c) ? 60 : 200);
      if (full.checks[k].verified_order < floor) {
        if (below_floor++ == 0) first_low = c.id;
      }
    }
    if (below_floor > 0) o.ok = false;
    o.detail << full.summary.pass << " pass, " << full.summary.fail << " fail, " << full.summary.skipped
             << " skipped of " << full.checks.size() << "; " << below_floor << " below the order floor";
    if (!first_low.empty()) o.detail << " (first " << first_low << ")";
    o.detail << "; " << seconds << " s on " << wide << " threads";
    emit(1, "full builtin suite at default orders", o);
  }

  {
    Outcome o;
    RunOptions opts;
    opts.order = 100;
    SuiteReport r = run_checks(select("kp:*"), opts, wide);
    require_all_pass(r, 4, o);
    o.detail << " at order 100";
    emit(2, "Kac-Peterson golden values", o);
  }

  {
    Outcome o;
    RunOptions opts;
    opts.order = 200;
    SuiteReport r = run_checks(select("mock:*:dual-form"), opts, wide);
    require_all_pass(r, 8, o);
    QZSeries f3 = mock_theta(MockName::f3, MockForm::eulerian, 4);
    const bool opening = f3.coefficient(0) == GaussianRational(1) && f3.coefficient(1) == GaussianRational(1) &&
                         f3.coefficient(2) == GaussianRational(-2) && f3.coefficient(3) == GaussianRational(3);
    o.ok = o.ok && opening;
    o.detail << " at order 200; f3 opening " << (opening ? "1 + q - 2q^2 + 3q^3" : "wrong");
    emit(3, "mock theta dual forms", o);
  }

  {
    Outcome o;
    std::vector<IdentityCheck> qp;
    for (const auto& c : select("thm:generalQuasiPeriodicityOddSpin:*")) {
      if (c.default_order >= 80) qp.push_back(c);
    }
    std::size_t expected = 0;
    for (auto [p, j] : {std::pair{2L, 1L}, {3L, 2L}, {5L, 2L}}) {
      // s in [0, j), 2r+1 <= p'-2, t in [-3, 3] without 0.
      for (long s = 0; s < j; ++s) {
        for (long r = 0; 2 * r + 1 <= 2 * p + j - 2; ++r) expected += 6;
      }
    }
    SuiteReport r = run_checks(qp, stable, wide);
    require_all_pass(r, expected, o);
    o.detail << " for |t| <= 3, (p,j) in {(2,1),(3,2),(5,2)}, order >= 80";
    emit(4, "quasi-periodicity path independence", o);
  }

  {
    Outcome o;
    std::vector<IdentityCheck> gate;
    for (const char* g : {"thm:generalPolarFiniteOddSpin:*", "thm:pP38m1ell2rPlus1:*", "thm:pP38m1ell2rPlus1Alt:*",
                          "cor:pP38m3ell2rPlus1:*", "cor:pP38m3ell2rPlus1Alt:*", "thm:pP512m1ell2rPlus1:*",
                          "cor:pP512m3ell2rPlus1:*"}) {
      auto part = select(g);
      if (part.empty()) {
        o.ok = false;
        o.detail << "missing " << g << "; ";
      }
      gate.insert(gate.end(), part.begin(), part.end());
    }
    std::set<std::string> polar_instances;
    for (const auto& c : gate) {
      if (c.id.rfind("thm:generalPolarFiniteOddSpin:", 0) == 0) polar_instances.insert(c.id.substr(0, c.id.find(",r=")));
    }
    if (polar_instances.size() != 5) o.ok = false;
    SuiteReport r = run_checks(gate, stable, wide);
    require_all_pass(r, gate.size(), o);

    std::mt19937 rng(5);
    std::size_t injected = 0, detected = 0;
    for (const auto& c : gate) {
      const long order = c.default_order.get_num().get_si() / c.default_order.get_den().get_si();
      std::uniform_int_distribution<long> pos(1, order - 1), z(-3, 3), num(-9, 9);
      for (long q : {0L, pos(rng), order - 1}) {
        RunOptions mut = stable;
        long a = num(rng);
        if (a == 0) a = 1;
        mut.perturbation = Perturbation{GaussianRational(exponent(a, 7)), q, c.cleared_by.empty() ? 0 : z(rng)};
        CheckReport m = run_check(c, mut);
        ++injected;
        if (m.status == Status::fail && m.first_difference && m.first_difference->q == q) ++detected;
      }
    }
    if (detected != injected) o.ok = false;
    o.detail << " (" << polar_instances.size() << " odd-spin (p,j) instances); mutations detected " << detected << "/"
             << injected;
    emit(5, "new-results gate with mutation testing", o);
  }

  {
    Outcome o;
    RunOptions opts;
    opts.order = 150;
    SuiteReport r = run_checks(select("lemma:polarFinite23m[13]AppellVanish:*"), opts, wide);
    require_all_pass(r, 4, o);
    o.detail << " at order 150";
    emit(6, "limit lemmas via the Appell bilateral sum", o);
  }

  // Cold cache so the second full run recomputes everything.
  clear_series_cache();
  const SuiteReport serial = run_suite("", stable, 1);

  {
    Outcome o;
    std::size_t audited = 0, violations = 0;
    for (const auto& [id, order] : evaluated_string_functions()) {
      ++audited;
      try {
        if (!string_coeff(id, true, order).is_integral()) ++violations;
      } catch (const IntegralityViolation&) {
        ++violations;
      }
    }
    std::size_t suite_violations = 0;
    for (const auto* r : {&full, &serial}) {
      for (const auto& c : r->checks) {
        if (c.reason.find("not integral") != std::string::npos) ++suite_violations;
      }
    }
    o.ok = audited > 0 && violations == 0 && suite_violations == 0;
    o.detail << audited << " string functions audited to their full truncation, " << violations
             << " non-integral; " << suite_violations << " integrality failures in the suite";
    emit(7, "integrality audit", o);
  }

  {
    Outcome o;
    const std::string a = cli::render_report(full, "*", "default", cli::Format::json);
    const std::string b = cli::render_report(serial, "*", "default", cli::Format::json);
    o.ok = a == b;
    o.detail << "threads " << wide << " vs 1: " << (o.ok ? "byte-identical" : "reports differ") << " (" << a.size()
             << " bytes)";
    emit(8, "determinism across thread counts", o);
  }

  return failed_any ? 1 : 0;
}
