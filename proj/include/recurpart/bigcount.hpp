/**
 * @file bigcount.hpp
 * @brief Exact partition counts over a set of allowed parts.
 */
#pragma once

#include "recurpart/hp.hpp"
#include "recurpart/seqkit.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace recurpart {

struct CountTable {
  long long n_max = 0;
  std::vector<BigInt> counts;
  std::vector<BigInt> parts;
  std::string spec_label;
};

/// Bytes the dense table may use before CapacityExceeded (default 8 GiB).
void set_memory_budget(std::size_t bytes);
std::size_t memory_budget();
/// Upper estimate of the table size in bytes.
std::size_t estimate_table_bytes(const std::vector<BigInt>& parts, long long n_max);

/// Coefficients of prod_p (1 - x^p)^{-1} up to x^{n_max}.
CountTable count_table(const std::vector<BigInt>& parts, long long n_max,
                       const std::string& label = "");
CountTable count_table(const RecurrenceSpec& spec, long long n_max);
/// p_F(n), parts F_2, F_3, ...
BigInt count_pF(long long n);
/// Enumerates partitions one by one; n <= 10^4.
BigInt brute_force_count(const std::vector<BigInt>& parts, long long n);
HPReal log_count(const BigInt& c);

}  // namespace recurpart
