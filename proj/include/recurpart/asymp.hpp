/**
 * @file asymp.hpp
 * @brief Asymptotic estimates of log p(n) in the form log A + B log n + C log log n.
 */
#pragma once

#include "recurpart/hp.hpp"
#include "recurpart/saddle.hpp"
#include "recurpart/seqkit.hpp"

#include <map>
#include <string>

namespace recurpart {

struct AsymptoticEstimate {
  BigInt n;
  HPReal log_value;
  HPReal A;
  HPReal B;
  HPReal C;
  std::map<std::string, HPReal> components;
  std::string spec_label;
};

/// n alpha + log G(e^{-alpha}) - 1/2 log(2 pi) - 1/2 log(-dn/ds(alpha)), Fibonacci parts.
HPReal ck_assemble(const HPReal& n, const HPReal& alpha);
HPReal ck_assemble(const SaddleModel& model, const HPReal& n, const HPReal& alpha);

/// (log n)^2 / (2 log phi)
HPReal leading_log(const HPReal& n);
HPReal leading_log(const HPReal& n, const HPReal& ell);

/// The closed form log p ~ log A + B X + C Y, X = log n, Y = log X, for a model with mean a
/// and residue constant K, given the psi values at n.
struct ClosedFormParts {
  HPReal logA;
  HPReal B;
  HPReal C;
};
ClosedFormParts closed_form(const HPReal& n, const HPReal& ell, const HPReal& K,
                            const HPReal& psi0, const HPReal& psi1);

/// log p ~ (w^2 + 2w)/(2l) - X + log w - 1/2 log(1 + w) - 1/2 log(2 pi l) - a^2 l / 2 + K + psi1
/// with w = W(n l e^{a l}).
HPReal w_form(const HPReal& n, const HPReal& ell, const HPReal& a, const HPReal& K,
              const HPReal& psi1);

AsymptoticEstimate theorem11_estimate(const BigInt& n);
AsymptoticEstimate theorem12_estimate(const RecurrenceSpec& spec, const BigInt& n);

/// The displays of A_F, B_F, C_F with the legacy constants c2, c3.
ClosedFormParts theorem11_legacy(const HPReal& n, const HPReal& psi0, const HPReal& psi1);
/// The displays of A_P, B_P, C_P with the legacy C_2.
ClosedFormParts theorem12_legacy(const RecurrenceSpec& spec, const HPReal& n, const HPReal& psi3,
                                 const HPReal& psi4);

}  // namespace recurpart
