/**
 * @file seqkit.hpp
 * @brief Integer linear recurrences with a dominant real root.
 *
 * P_{k+r} = c_1 P_{k+r-1} + ... + c_r P_k, P_1 = 1, and
 * P_k = lambda beta^k + sum_j lambda_j beta_j^k.
 */
#pragma once

#include "recurpart/hp.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace recurpart {

class TermCache {
 public:
  TermCache(std::vector<long long> coeffs, std::vector<long long> initial);
  /// P_k for k >= 1, by the integer recurrence.
  BigInt term(long k) const;

 private:
  std::vector<long long> coeffs_;
  mutable std::mutex mu_;
  mutable std::vector<BigInt> terms_;
};

struct RecurrenceSpec {
  std::vector<long long> coeffs;
  std::vector<long long> initial_terms;
  int degree = 0;
  HPReal dominant_root;
  /// beta_2..beta_r, by decreasing modulus.
  std::vector<HPComplex> conjugate_roots;
  /// lambda, lambda_2..lambda_r matching dominant_root, conjugate_roots.
  std::vector<HPComplex> binet_coeffs;
  std::string label;
  /// First index used as a part. Fibonacci uses 2 so that 1 appears once.
  int index_origin = 1;
  std::vector<std::string> warnings;
  std::shared_ptr<const TermCache> cache;

  HPReal lambda() const { return binet_coeffs.front().re; }
  HPReal log_beta() const;
  /// max_j |beta_j|, 0 when r = 1.
  HPReal second_modulus() const;
};

RecurrenceSpec make_fibonacci();
RecurrenceSpec make_recurrence(const std::vector<long long>& coeffs,
                               const std::vector<long long>& initial, const std::string& label);
/// Same as make_recurrence with an explicit part index origin.
RecurrenceSpec make_recurrence(const std::vector<long long>& coeffs,
                               const std::vector<long long>& initial, const std::string& label,
                               int index_origin);
RecurrenceSpec make_pell();

BigInt term(const RecurrenceSpec& spec, long k);
/// Distinct terms P_origin, P_origin+1, ... that are <= limit.
std::vector<BigInt> parts_up_to(const RecurrenceSpec& spec, const BigInt& limit);

/// Identifies the recurrence and the current precision, for memo tables.
std::string cache_key(const RecurrenceSpec& spec);

/// Integer irreducibility of x^r - c_1 x^{r-1} - ... - c_r over Q, for r <= 4.
bool char_poly_irreducible(const std::vector<long long>& coeffs);

}  // namespace recurpart
