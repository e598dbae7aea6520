#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qsv/registry.hpp"

namespace qsv::cli {

enum class Format { text, json, csv };

Format parse_format(const std::string& name);

/// The verify report as JSON: {suite, order, checks, summary}.
nlohmann::ordered_json report_json(const SuiteReport& report, const std::string& suite, const std::string& order);
std::string render_report(const SuiteReport& report, const std::string& suite, const std::string& order,
                          Format format);

std::string render_listing(const std::vector<IdentityCheck>& checks, Format format);

/// (exponent, coefficient) rows of a one-variable series.
std::string render_coefficients(const QZSeries& series, Format format);
/// (q exponent, z exponent, coefficient) rows of a two-variable series.
std::string render_terms(const QZSeries& series, Format format);

/// 0 pass, 1 any failure, 3 skipped checks (1 under strict_skip).
int exit_code(const SuiteSummary& summary, bool strict_skip);

/// Quotes a CSV field when it holds a separator, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace qsv::cli
