#include <doctest.h>

#include <random>
#include <set>

#include "qsv/errors.hpp"
#include "qsv/registry.hpp"
#include "report.hpp"

using namespace qsv;

TEST_CASE("catalogue is large, parameter-closed and uniquely keyed") {
  const auto& cat = builtin_catalogue();
  CHECK(cat.size() >= 60);
  std::set<std::string> ids;
  for (const auto& c : cat) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
    CHECK(c.default_order > 0);
  }
}

TEST_CASE("every family the catalogue promises is present") {
  for (const char* prefix :
       {"kp:", "mock:", "theta:", "appell:changing-z", "cor:msplit", "cor:pP25m0", "cor:pP25m1", "thm:pP37m0",
        "cor:pP37m1", "thm:pP38m0", "thm:pP38m1ell2rPlus1:", "thm:pP38m1ell2rPlus1Alt:", "cor:pP38m3ell2rPlus1:",
        "cor:pP38m3ell2rPlus1Alt:", "thm:pP511m0", "cor:pP511m1", "thm:pP512m0", "thm:pP512m1ell2rPlus1",
        "cor:pP512m3ell2rPlus1", "thm:generalPolarFiniteOddSpin:", "thm:generalPolarFiniteEvenSpin:",
        "cor:generalPolarFiniteOddSpin1p", "prop:polarFinitePreAppell", "prop:initSumOver_i_tPreAppellFinal",
        "prop:polarFinite23OddSpin", "lemma:polarFinite23m1AppellVanish", "lemma:polarFinite23m3AppellVanish",
        "prop:weylKac23ell2rzVal", "prop:masterThetaIdentitypP38m1ell2rPlus1", "lemma:unusualThetaIdentity1",
        "lemma:unusualThetaIdentity2", ":idLHS", ":idRHS", "thm:crossSpin-j-Odd", "eq:generalMockThetaConjLevel12",
        "eq:fourierFinal37", "eq:weylKacFinal37", "thm:generalQuasiPeriodicityOddSpin"}) {
    bool found = false;
    for (const auto& c : builtin_catalogue()) found = found || c.id.find(prefix) != std::string::npos;
    CAPTURE(std::string(prefix));
    CHECK(found);
  }
}

TEST_CASE("lookup") {
  const IdentityCheck* c = find_check("lemma:unusualThetaIdentity1");
  REQUIRE(c != nullptr);
  CHECK(c->anchor.find("unusualThetaIdentity1") != std::string::npos);
  CHECK(find_check("thm:doesNotExist") == nullptr);
  CHECK_THROWS_AS(run_check("thm:doesNotExist"), UnknownName);
}

TEST_CASE("two-variable checks record their normalizer") {
  const IdentityCheck* c = find_check("thm:generalPolarFiniteOddSpin:p=3,j=2,r=0");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->cleared_by.empty());
  CHECK(c->default_order == 60);
  CHECK(c->has_tag("new"));
}

TEST_CASE("glob selection") {
  CHECK(glob_match("thm:pP38*", "thm:pP38m1ell2rPlus1:r=0"));
  CHECK_FALSE(glob_match("thm:pP38*", "cor:pP38m3ell2rPlus1:r=0"));
  CHECK(glob_match("", "anything"));
  CHECK(glob_match("lemma:?nusual*", "lemma:unusualThetaIdentity1"));
  SuiteReport none = run_suite("no-such-family:*", {}, 2);
  CHECK(none.checks.empty());
  CHECK(none.summary.pass == 0);
  CHECK(none.summary.fail == 0);
  CHECK(none.summary.skipped == 0);
  CHECK_FALSE(none.summary.common_order);
}

TEST_CASE("spot checks at stated orders") {
  RunOptions at120;
  at120.order = 120;
  CHECK(run_check("cor:pP25m1:r=0:mu-form", at120).status == Status::pass);
  RunOptions at40;
  at40.order = 40;
  CHECK(run_check("thm:generalPolarFiniteOddSpin:p=3,j=2,r=0", at40).status == Status::pass);
  CheckReport lemma = run_check("lemma:unusualThetaIdentity1");
  CHECK(lemma.status == Status::pass);
  CHECK(lemma.verified_order == 200);
  CHECK_FALSE(lemma.first_difference);
}

TEST_CASE("a perturbed right-hand side fails at the perturbed exponent") {
  RunOptions opts;
  opts.order = 60;
  opts.perturbation = Perturbation{1, 5};
  CheckReport r = run_check("lemma:unusualThetaIdentity1", opts);
  CHECK(r.status == Status::fail);
  REQUIRE(r.first_difference);
  CHECK(r.first_difference->q == 5);
  CHECK(r.verified_order == 5);
}

TEST_CASE("single-coefficient mutations are detected on a random sample") {
  const auto& cat = builtin_catalogue();
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  std::uniform_int_distribution<int> pos(0, 19), num(1, 7);
  for (int trial = 0; trial < 25; ++trial) {
    const IdentityCheck& c = cat[pick(rng)];
    RunOptions opts;
    opts.order = 20;
    const Exponent q = pos(rng);
    const Exponent z = c.cleared_by.empty() ? 0 : (trial % 3) - 1;
    opts.perturbation = Perturbation{GaussianRational(exponent(num(rng), 3)), q, z};
    CheckReport r = run_check(c, opts);
    CAPTURE(c.id);
    CAPTURE(exponent_to_string(q));
    CHECK(r.status == Status::fail);
    REQUIRE(r.first_difference);
    CHECK(r.first_difference->q == q);
  }
}

TEST_CASE("a check passing at order T passes at every lower order") {
  for (const char* id : {"lemma:unusualThetaIdentity1", "kp:C2:1,1", "cor:pP38m3ell2rPlus1:r=1",
                         "thm:generalPolarFiniteOddSpin:p=2,j=1,r=0"}) {
    CAPTURE(id);
    REQUIRE(find_check(id) != nullptr);
    for (int t : {1, 3, 7, 15, 31}) {
      RunOptions opts;
      opts.order = t;
      CHECK(run_check(id, opts).status == Status::pass);
    }
  }
}

TEST_CASE("evaluation errors become skips, integrality violations become failures") {
  IdentityCheck pole;
  pole.id = "test:pole";
  pole.lhs = Expr::constant(1) / ex::j(ThetaArg(1, 1), 1);
  pole.rhs = Expr::constant(1);
  pole.default_order = 10;
  CheckReport r = run_check(pole);
  CHECK(r.status == Status::skipped);
  CHECK_FALSE(r.reason.empty());

  IdentityCheck bad;
  bad.id = "test:integrality";
  bad.lhs = Expr::leaf("nonintegral", [](const Exponent&) -> QZSeries {
    throw IntegralityViolation("coefficient 1/2 at q^0");
  });
  bad.rhs = Expr::constant(0);
  bad.default_order = 10;
  CHECK(run_check(bad).status == Status::fail);
}

TEST_CASE("reports are identical across thread counts") {
  RunOptions opts;
  opts.order = 30;
  opts.timing = false;
  const std::string filter = "cor:pP38*";
  std::string one = cli::render_report(run_suite(filter, opts, 1), filter, "30", cli::Format::json);
  std::string four = cli::render_report(run_suite(filter, opts, 4), filter, "30", cli::Format::json);
  CHECK(one == four);
  CHECK(one.find("\"wall_time_ms\": 0") != std::string::npos);
}

TEST_CASE("JSON report round-trips") {
  RunOptions opts;
  opts.order = 20;
  opts.timing = false;
  opts.perturbation = Perturbation{GaussianRational(Rational(1, 2), Rational(-1, 3)), exponent(7, 2)};
  SuiteReport report = run_suite("lemma:unusualThetaIdentity*", opts, 2);
  auto doc = cli::report_json(report, "lemma:unusualThetaIdentity*", "20");
  const std::string text = doc.dump(2);
  auto parsed = nlohmann::ordered_json::parse(text);
  CHECK(parsed.dump(2) == text);
  CHECK(parsed["summary"]["fail"].get<std::size_t>() == report.checks.size());
  const auto& first = parsed["checks"][0];
  CHECK(first["first_difference"]["q"] == "7/2");
  CHECK(GaussianRational::parse(first["first_difference"]["rhs"].get<std::string>()) -
            GaussianRational::parse(first["first_difference"]["lhs"].get<std::string>()) ==
        GaussianRational(Rational(1, 2), Rational(-1, 3)));
}

TEST_CASE("exit codes") {
  SuiteSummary s;
  CHECK(cli::exit_code(s, false) == 0);
  s.skipped = 1;
  CHECK(cli::exit_code(s, false) == 3);
  CHECK(cli::exit_code(s, true) == 1);
  s.fail = 1;
  CHECK(cli::exit_code(s, false) == 1);
}

TEST_CASE("CSV fields are quoted only when needed") {
  CHECK(cli::csv_field("plain") == "plain");
  CHECK(cli::csv_field("a,b") == "\"a,b\"");
  CHECK(cli::csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
}
