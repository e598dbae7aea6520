#include "report.hpp"

#include <sstream>

#include "qsv/errors.hpp"

namespace qsv::cli {

namespace {

using nlohmann::ordered_json;

std::string time_string(double ms) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << ms;
  return s.str();
}

/// Rows of a one-variable series on the unit grid through its lowest exponent, zeros included.
std::vector<std::pair<Exponent, GaussianRational>> dense_rows(const QZSeries& series) {
  std::vector<std::pair<Exponent, GaussianRational>> rows;
  const auto terms = series.terms();
  if (terms.empty()) return rows;
  const Exponent start = terms.front().q;
  bool on_grid = true;
  for (const auto& t : terms) {
    const Exponent offset = t.q - start;
    if (offset.get_den() != 1) on_grid = false;
  }
  if (!on_grid || !series.trunc()) {
    for (const auto& t : terms) rows.emplace_back(t.q, t.coeff);
    return rows;
  }
  for (Exponent e = start; e < *series.trunc(); e += 1) rows.emplace_back(e, series.coefficient(e));
  return rows;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw InvalidArgument("unknown format '" + name + "' (expected text, json or csv)");
}

int exit_code(const SuiteSummary& summary, bool strict_skip) {
  if (summary.fail > 0) return 1;
  if (summary.skipped > 0) return strict_skip ? 1 : 3;
  return 0;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json report_json(const SuiteReport& report, const std::string& suite, const std::string& order) {
  ordered_json checks = ordered_json::array();
  for (const auto& r : report.checks) {
    ordered_json c;
    c["id"] = r.id;
    c["anchor"] = r.anchor;
    c["status"] = to_string(r.status);
    c["verified_order"] = exponent_to_string(r.verified_order);
    if (r.first_difference) {
      const auto& d = *r.first_difference;
      c["first_difference"] = {{"q", exponent_to_string(d.q)},
                               {"z", exponent_to_string(d.z)},
                               {"lhs", d.lhs.to_string()},
                               {"rhs", d.rhs.to_string()}};
    }
    c["wall_time_ms"] = r.wall_time_ms;
    if (!r.reason.empty()) c["reason"] = r.reason;
    checks.push_back(std::move(c));
  }
  ordered_json out;
  out["suite"] = suite;
  out["order"] = order;
  out["checks"] = std::move(checks);
  out["summary"] = {{"pass", report.summary.pass}, {"fail", report.summary.fail}, {"skipped", report.summary.skipped}};
  return out;
}

std::string render_report(const SuiteReport& report, const std::string& suite, const std::string& order,
                          Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json:
      out << report_json(report, suite, order).dump(2) << '\n';
      break;
    case Format::csv:
      out << "id,anchor,status,verified_order,first_difference_q,first_difference_z,first_difference_lhs,"
             "first_difference_rhs,wall_time_ms,reason\n";
      for (const auto& r : report.checks) {
        out << csv_field(r.id) << ',' << csv_field(r.anchor) << ',' << to_string(r.status) << ','
            << exponent_to_string(r.verified_order) << ',';
        if (r.first_difference) {
          const auto& d = *r.first_difference;
          out << exponent_to_string(d.q) << ',' << exponent_to_string(d.z) << ',' << csv_field(d.lhs.to_string())
              << ',' << csv_field(d.rhs.to_string()) << ',';
        } else {
          out << ",,,,";
        }
        out << time_string(r.wall_time_ms) << ',' << csv_field(r.reason) << '\n';
      }
      break;
    case Format::text:
      for (const auto& r : report.checks) {
        out << to_string(r.status) << "  " << r.id << "  [" << r.anchor << "]  order "
            << exponent_to_string(r.verified_order) << "  " << time_string(r.wall_time_ms) << " ms";
        if (r.first_difference) {
          const auto& d = *r.first_difference;
          out << "  first difference at q^" << exponent_to_string(d.q) << " z^" << exponent_to_string(d.z) << ": "
              << d.lhs.to_string() << " vs " << d.rhs.to_string();
        }
        if (!r.reason.empty()) out << "  (" << r.reason << ")";
        out << '\n';
      }
      out << "suite " << suite << ", order " << order << ": " << report.summary.pass << " pass, "
          << report.summary.fail << " fail, " << report.summary.skipped << " skipped";
      if (report.summary.common_order) out << ", common order " << exponent_to_string(*report.summary.common_order);
      out << '\n';
      break;
  }
  return out.str();
}

std::string render_listing(const std::vector<IdentityCheck>& checks, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& c : checks) {
        arr.push_back({{"id", c.id},
                       {"anchor", c.anchor},
                       {"default_order", exponent_to_string(c.default_order)},
                       {"tags", c.tags}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "id,anchor,default_order\n";
      for (const auto& c : checks) {
        out << csv_field(c.id) << ',' << csv_field(c.anchor) << ',' << exponent_to_string(c.default_order) << '\n';
      }
      break;
    case Format::text:
      for (const auto& c : checks) out << c.id << "  " << c.anchor << '\n';
      break;
  }
  return out.str();
}

std::string render_coefficients(const QZSeries& series, Format format) {
  const auto rows = dense_rows(series);
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& [e, c] : rows) arr.push_back({{"exponent", exponent_to_string(e)}, {"coefficient", c.to_string()}});
      ordered_json doc;
      doc["truncation"] = series.trunc() ? exponent_to_string(*series.trunc()) : "exact";
      doc["rows"] = std::move(arr);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "exponent,coefficient\n";
      for (const auto& [e, c] : rows) out << exponent_to_string(e) << ',' << csv_field(c.to_string()) << '\n';
      break;
    case Format::text:
      for (const auto& [e, c] : rows) out << exponent_to_string(e) << '\t' << c.to_string() << '\n';
      break;
  }
  return out.str();
}

std::string render_terms(const QZSeries& series, Format format) {
  std::ostringstream out;
  const auto terms = series.terms();
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& t : terms) {
        arr.push_back({{"q", exponent_to_string(t.q)}, {"z", exponent_to_string(t.z)}, {"coefficient", t.coeff.to_string()}});
      }
      ordered_json doc;
      doc["truncation"] = series.trunc() ? exponent_to_string(*series.trunc()) : "exact";
      doc["terms"] = std::move(arr);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "q,z,coefficient\n";
      for (const auto& t : terms) {
        out << exponent_to_string(t.q) << ',' << exponent_to_string(t.z) << ',' << csv_field(t.coeff.to_string()) << '\n';
      }
      break;
    case Format::text:
      for (const auto& t : terms) {
        out << exponent_to_string(t.q) << '\t' << exponent_to_string(t.z) << '\t' << t.coeff.to_string() << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace qsv::cli
