#include "recurpart/report.hpp"

#include "recurpart/diag.hpp"
#include "recurpart/errors.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#ifndef RECURPART_GIT_DESCRIBE
#define RECURPART_GIT_DESCRIBE "unknown"
#endif

namespace recurpart {

void Report::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) {
    throw ValidationError("report row has " + std::to_string(row.size()) + " fields, expected " +
                          std::to_string(columns.size()));
  }
  rows.push_back(std::move(row));
}

Report make_report(std::vector<std::string> columns) {
  Report r;
  r.columns = std::move(columns);
  return r;
}

std::string format_full(const HPReal& x) { return to_string(x, carried_digits()); }

std::string format_full(const BigInt& x) { return x.str(); }

std::string git_describe() { return RECURPART_GIT_DESCRIBE; }

void stamp_metadata(Report& report) {
  report.metadata["precision_digits"] = std::to_string(working_digits());
  report.metadata["carried_digits"] = std::to_string(carried_digits());
  report.metadata["git_describe"] = git_describe();
  std::ostringstream cuts;
  bool first = true;
  for (const auto& [name, idx] : diag::cuts()) {
    if (!first) cuts << ';';
    cuts << name << '=' << idx;
    first = false;
  }
  report.metadata["truncation"] = cuts.str();
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream ts;
  ts << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  report.metadata["timestamp"] = ts.str();
}

std::string to_csv(const Report& report) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      os << fields[i];
    }
    os << '\n';
  };
  line(report.columns);
  for (const auto& r : report.rows) line(r);
  return os.str();
}

void emit_csv(const Report& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << to_csv(report);
  if (!out) throw IoError("write failed for " + path);
  nlohmann::json meta = report.metadata;
  meta["columns"] = report.columns;
  meta["rows"] = report.rows.size();
  std::ofstream side(path + ".meta.json", std::ios::binary);
  if (!side) throw IoError("cannot open " + path + ".meta.json for writing");
  side << meta.dump(2) << '\n';
}

}  // namespace recurpart
