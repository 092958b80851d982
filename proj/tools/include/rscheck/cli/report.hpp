#pragma once

// Verification reports and their text, JSON and CSV renderings.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rscheck/check_result.hpp"

namespace rscheck::cli {

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t ill_posed = 0;
  std::size_t inconclusive = 0;

  friend bool operator==(const Summary&, const Summary&) = default;
};

Summary tally(const std::vector<CheckResult>& results);

struct Report {
  std::string version;
  std::optional<std::string> timestamp;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<CheckResult> results;

  Summary summary() const { return tally(results); }

  friend bool operator==(const Report&, const Report&) = default;
};

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view text);

std::string emit_report(const Report& report, Format format);

/// Inverse of emit_report(.., Json). Throws std::invalid_argument on
/// malformed input or when the stored summary disagrees with the results.
Report parse_json_report(std::string_view text);

/// 0 when nothing failed and nothing was ill-posed, 1 otherwise.
int exit_code(const Summary& s);

/// One CSV field, quoted when needed.
std::string csv_field(std::string_view text);

}  // namespace rscheck::cli
