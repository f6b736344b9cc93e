#pragma once

#include <map>
#include <string>
#include <vector>

namespace recurpart::diag {

/// Non-fatal conditions (EmptyParts, degree > 4 irreducibility skip, ...).
void warn(const std::string& message);
std::vector<std::string> drain_warnings();

/// Where a truncated series was cut, keyed by series name.
void record_cut(const std::string& series, long long index);
std::map<std::string, long long> cuts();

}  // namespace recurpart::diag
