/**
 * @file verify.hpp
 * @brief Acceptance suite: one pass/fail verdict per numbered criterion.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recurpart {

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string title;
  /// Measured numbers, one line each.
  std::vector<std::string> details;
};

struct AcceptanceOptions {
  /// Decade grids up to 10^6 instead of 10^4.
  bool full = false;
  int digits = 64;
};

constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

/// Runs every criterion, writing details and a PASS/FAIL line for each to `out`.
/// Returns the number of failures.
int run_acceptance(const AcceptanceOptions& opt, std::ostream& out);

}  // namespace recurpart
