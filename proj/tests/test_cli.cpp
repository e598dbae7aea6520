#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "qsv/hecke.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& exe, const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + exe + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Run cli(const std::string& args, const std::string& env = "") { return run(QSV_EXE, args, env); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "qsv-cli-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("coeffs at level one lists partition numbers") {
  Run r = cli("coeffs 1 3 0 0 --order 6 --normalized --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "exponent,coefficient\n0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n");
}

TEST_CASE("coeffs without normalization shows fractional exponents") {
  Run r = cli("coeffs 1 3 0 0 --order 3");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("-1/24\t1\n23/24\t1\n47/24\t2\n", 0) == 0);
}

TEST_CASE("coeffs rejects invalid parameters with exit 2") {
  Run level = cli("coeffs 2 3 0 0");
  CHECK(level.code == 2);
  CHECK(level.out.find("level") != std::string::npos);
  Run coprime = cli("coeffs 2 4 0 0");
  CHECK(coprime.code == 2);
  CHECK(coprime.out.find("coprime") != std::string::npos);
  CHECK(cli("coeffs 3 8 1 0").code == 2);
  CHECK(cli("coeffs 3 8 1 1 --order -4").code == 2);
  CHECK(cli("coeffs 3 8 1 1 --format xml").code == 2);
  CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("coeffs json table matches the box-sum oracle") {
  Run r = cli("coeffs 3 8 1 1 --order 20 --normalized --format json");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["truncation"] == "20");
  const auto oracle = oracle::dense(qsv::string_coeff({3, 8, 1, 1}, true, 20), 20);
  REQUIRE(doc["rows"].size() == 20);
  for (int n = 0; n < 20; ++n) {
    CHECK(doc["rows"][n]["exponent"] == std::to_string(n));
    CHECK(doc["rows"][n]["coefficient"] == std::to_string(oracle[n]));
  }
}

TEST_CASE("character prints exact two-variable terms") {
  Run r = cli("character 1 3 0 --order 2 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("q,z,coefficient\n", 0) == 0);
  CHECK(r.out.find("-1/24,0,1\n") != std::string::npos);
  CHECK(cli("character 2 4 0").code == 2);
}

TEST_CASE("list covers the catalogue") {
  Run text = cli("list");
  CHECK(text.code == 0);
  CHECK(text.out.find("thm:generalPolarFiniteOddSpin") != std::string::npos);
  CHECK(count_lines(text.out) >= 60);
  Run json = cli("list --format json");
  auto arr = nlohmann::json::parse(json.out);
  CHECK(arr.is_array());
  CHECK(arr.size() == count_lines(text.out));
  CHECK(arr[0].contains("anchor"));
}

TEST_CASE("verify lemmas at order 150") {
  Run r = cli("verify --filter 'lemma:*' --order 150");
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 fail, 0 skipped") != std::string::npos);
}

TEST_CASE("verify csv output has one row per check") {
  const auto path = scratch("report.csv");
  std::filesystem::remove(path);
  Run r = cli("verify --filter 'cor:pP38*' --order 30 --format csv --output " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const std::string csv = slurp(path);
  Run listing = cli("list --filter 'cor:pP38*'");
  CHECK(count_lines(csv) == count_lines(listing.out) + 1);
  CHECK(csv.rfind("id,anchor,status,verified_order,", 0) == 0);
}

TEST_CASE("verify json follows the documented schema") {
  Run r = cli("verify --filter 'kp:*' --order 30 --format json --no-timing");
  REQUIRE(r.code == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["suite"] == "kp:*");
  CHECK(doc["order"] == "30");
  CHECK(doc["summary"]["pass"] == doc["checks"].size());
  for (const auto& c : doc["checks"]) {
    for (const char* key : {"id", "anchor", "status", "verified_order", "wall_time_ms"}) CHECK(c.contains(key));
    CHECK_FALSE(c.contains("first_difference"));
  }
  CHECK(nlohmann::ordered_json::parse(doc.dump(2)).dump(2) == doc.dump(2));
}

TEST_CASE("verify output is byte-stable across runs and thread counts") {
  const std::string args = "verify --filter 'thm:pP38*' --order 25 --format json --no-timing";
  Run a = cli(args + " --threads 1");
  Run b = cli(args + " --threads 3");
  Run c = cli(args, "QSV_THREADS=2");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("a build with a wrong constant exits 1 with the difference") {
  Run r = run(QSV_MUTANT_EXE, "verify --filter 'kp:*' --order 30 --format json --no-timing");
  CHECK(r.code == 1);
  auto doc = nlohmann::json::parse(r.out);
  for (const auto& c : doc["checks"]) {
    CHECK(c["status"] == "fail");
    CHECK(c["first_difference"]["q"] == "5");
  }
}

TEST_CASE("config file presets and flags override it") {
  const auto cfg = scratch("qsv.conf");
  {
    std::ofstream out(cfg);
    out << "# presets\norder = 4\nformat = csv\n";
  }
  Run preset = cli("--config " + cfg.string() + " coeffs 1 3 0 0 --normalized");
  CHECK(preset.out == "exponent,coefficient\n0,1\n1,1\n2,2\n3,3\n");
  Run flagged = cli("--config " + cfg.string() + " coeffs 1 3 0 0 --normalized --order 2 --format text");
  CHECK(flagged.out == "0\t1\n1\t1\n");
  {
    std::ofstream out(cfg);
    out << "threads 4\n";
  }
  CHECK(cli("--config " + cfg.string() + " list").code == 2);
  CHECK(cli("--config /nonexistent/qsv.conf list").code == 2);
}

TEST_CASE("thread settings are validated") {
  CHECK(cli("verify --filter 'kp:C1*' --order 5 --threads 0").code == 2);
  CHECK(cli("verify --filter 'kp:C1*' --order 5", "QSV_THREADS=zero").code == 2);
  CHECK(cli("verify --filter 'kp:C1*' --order 5", "QSV_THREADS=2").code == 0);
}
