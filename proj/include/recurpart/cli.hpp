/**
 * @file cli.hpp
 * @brief The `recurpart` command line: thin wrappers over the library.
 *
 * Exit codes: 0 ok, 2 validation error, 3 numeric failure, 64 usage error.
 */
#pragma once

#include "recurpart/hp.hpp"
#include "recurpart/seqkit.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace recurpart {

struct RunConfig {
  int digits = kDefaultDigits;
  std::optional<std::string> recurrence_file;
  long long nmax = 0;
  std::optional<std::string> out_path;
};

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitUsage = 64;

/// {"label": str, "coeffs": [int], "initial": [int]}
RecurrenceSpec load_recurrence_json(const std::string& path);

/// Default precision: RECURPART_DIGITS if set, else kDefaultDigits.
int default_digits_from_env();

/// Number formatting shared by every command: D significant digits.
std::string cli_number(const HPReal& x);

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace recurpart
