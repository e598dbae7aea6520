// qsv: string-function coefficients, characters and identity verification.

#include <array>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "qsv/errors.hpp"
#include "qsv/hecke.hpp"
#include "qsv/registry.hpp"
#include "report.hpp"

namespace {

using namespace qsv;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 2;

/// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = CLI::detail::trim_copy(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidArgument(path + ":" + std::to_string(n) + ": expected key=value");
    out[CLI::detail::trim_copy(line.substr(0, eq))] = CLI::detail::trim_copy(line.substr(eq + 1));
  }
  return out;
}

Exponent parse_order(const std::string& text) {
  Exponent e;
  try {
    e = Exponent(text);
    e.canonicalize();
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("order '" + text + "' is not a rational number");
  }
  if (sgn(e) <= 0) throw InvalidArgument("order must be positive");
  return e;
}

unsigned parse_threads(const std::string& text) {
  long v = 0;
  try {
    v = std::stol(text);
  } catch (const std::exception&) {
    throw InvalidArgument("threads '" + text + "' is not an integer");
  }
  if (v < 1) throw InvalidArgument("threads must be at least 1");
  return static_cast<unsigned>(v);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

struct Settings {
  std::string config_path;
  std::string order;
  std::string format;
  std::string threads;
  std::string output;
};

/// Flag value, else config value, else fallback.
std::string resolve(const std::string& flag, const std::map<std::string, std::string>& config, const std::string& key,
                    const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (auto it = config.find(key); it != config.end()) return it->second;
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series toolkit for admissible-level string functions"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--config", s.config_path, "key=value file presetting order, threads and format");

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", s.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  std::array<long, 4> coeff_args{};
  bool normalized = false;
  auto* coeffs = app.add_subcommand("coeffs", "String function coefficients C_{m,l} at level p'/p - 2");
  coeffs->add_option("p", coeff_args[0])->required();
  coeffs->add_option("pprime", coeff_args[1])->required();
  coeffs->add_option("m", coeff_args[2])->required();
  coeffs->add_option("ell", coeff_args[3])->required();
  coeffs->add_option("--order", s.order, "q-truncation order");
  coeffs->add_flag("--normalized", normalized, "integral normalization (drop q^{s_lambda})");
  coeffs->add_option("--output", s.output, "write to a file instead of stdout");
  add_format(coeffs);

  std::array<long, 3> char_args{};
  auto* character = app.add_subcommand("character", "Character chi_l as a series in q and z");
  character->add_option("p", char_args[0])->required();
  character->add_option("pprime", char_args[1])->required();
  character->add_option("ell", char_args[2])->required();
  character->add_option("--order", s.order, "q-truncation order");
  character->add_option("--output", s.output, "write to a file instead of stdout");
  add_format(character);

  std::string filter;
  bool strict_skip = false;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "Verify catalogue identities");
  verify->add_option("--filter", filter, "shell glob over check ids");
  verify->add_option("--order", s.order, "override every check's default order");
  verify->add_option("--threads", s.threads, "worker threads (default QSV_THREADS, else hardware)");
  verify->add_option("--output", s.output, "write the report to a file");
  verify->add_flag("--strict-skip", strict_skip, "count skipped checks as failures");
  verify->add_flag("--no-timing", no_timing, "report zero wall times for byte-stable output");
  add_format(verify);

  auto* list = app.add_subcommand("list", "List catalogue checks and their anchors");
  list->add_option("--filter", filter, "shell glob over check ids");
  add_format(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const auto config = s.config_path.empty() ? std::map<std::string, std::string>{} : read_config(s.config_path);
    const cli::Format format = cli::parse_format(resolve(s.format, config, "format", "text"));

    if (*coeffs) {
      StringFnId id{coeff_args[0], coeff_args[1], coeff_args[2], coeff_args[3]};
      id.validate();
      const Exponent order = parse_order(resolve(s.order, config, "order", "20"));
      emit(cli::render_coefficients(string_coeff(id, normalized, order), format), s.output);
      return kExitPass;
    }
    if (*character) {
      StringFnId{char_args[0], char_args[1], 0, char_args[2]}.validate();
      const Exponent order = parse_order(resolve(s.order, config, "order", "10"));
      emit(cli::render_terms(qsv::character(char_args[0], char_args[1], char_args[2], order), format), s.output);
      return kExitPass;
    }
    if (*list) {
      std::vector<IdentityCheck> selected;
      for (const auto& c : builtin_catalogue()) {
        if (glob_match(filter, c.id)) selected.push_back(c);
      }
      emit(cli::render_listing(selected, format), s.output);
      return kExitPass;
    }

    RunOptions options;
    const std::string order_text = resolve(s.order, config, "order", "");
    if (!order_text.empty()) options.order = parse_order(order_text);
    options.timing = !no_timing;
#ifdef QSV_INJECT_PERTURBATION
    // Test build: every right-hand side gains +q^5.
    options.perturbation = Perturbation{1, 5};
#endif
    std::string threads_text = resolve(s.threads, config, "threads", "");
    if (threads_text.empty()) {
      const char* env = std::getenv("QSV_THREADS");
      threads_text = env != nullptr ? env : std::to_string(std::max(1u, std::thread::hardware_concurrency()));
    }
    const unsigned threads = parse_threads(threads_text);
    const SuiteReport report = run_suite(filter, options, threads);
    const std::string suite = filter.empty() ? "*" : filter;
    const std::string order_label = options.order ? exponent_to_string(*options.order) : "default";
    emit(cli::render_report(report, suite, order_label, format), s.output);
    return cli::exit_code(report.summary, strict_skip);
  } catch (const Error& e) {
    std::cerr << "qsv: " << e.what() << '\n';
    return kExitUsage;
  }
}
