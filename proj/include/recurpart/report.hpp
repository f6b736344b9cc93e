/**
 * @file report.hpp
 * @brief Tabular reports with run metadata, written as CSV plus a JSON sidecar.
 */
#pragma once

#include "recurpart/hp.hpp"

#include <map>
#include <string>
#include <vector>

namespace recurpart {

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// precision, truncation indices, git describe, timestamp
  std::map<std::string, std::string> metadata;

  void add_row(std::vector<std::string> row);
};

Report make_report(std::vector<std::string> columns);

/// Decimal string that reads back to the same value at the carried precision.
std::string format_full(const HPReal& x);
std::string format_full(const BigInt& x);

/// Fills precision, cut indices, git describe and a UTC timestamp.
void stamp_metadata(Report& report);

std::string git_describe();

/// CSV text: header row, LF line endings.
std::string to_csv(const Report& report);
/// Writes path and path + ".meta.json". Throws IoError.
void emit_csv(const Report& report, const std::string& path);

}  // namespace recurpart
