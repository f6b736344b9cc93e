/**
 * @file genlog.hpp
 * @brief Small-s expansion of log F_2(e^{-s}) = -sum_{k>=2} log(1 - e^{-s F_k})
 *        and of its analogue for a general recurrence.
 *
 * With L = log s and l = log phi:
 *   log F_2(e^{-s}) = L^2/(2l) + (1 - b0) L + K + h_k0(s) - s + g(s) + h_{k>=1}(s) + O(s^2)
 * where b0 = (log 5 - l)/(2l) and K = c2_exact().
 */
#pragma once

#include "recurpart/hp.hpp"
#include "recurpart/seqkit.hpp"

#include <functional>
#include <vector>

namespace recurpart {

/// 2 Re sum_{n>=1} C_n s^{-i w n}, w = 2 pi / ell: a function of log s / ell with period 1.
struct PeriodicLine {
  HPReal ell;
  std::vector<HPComplex> coeffs;

  HPReal value(const HPReal& s) const;
  /// -s d/ds value(s)
  HPReal mellin(const HPReal& s) const;
  /// (s d/ds)^2 value(s)
  HPReal mellin2(const HPReal& s) const;
};

struct LogGenExpansion {
  HPReal quad_coeff;
  HPReal lin_coeff;
  HPReal const_term;
  std::function<HPReal(const HPReal&)> correction;
  HPReal error_order;

  HPReal evaluate(const HPReal& s) const;
};

// -- constants --------------------------------------------------------------

/// 1/2 log 5 - 1/2 log phi + 2 gamma, the closed form carrying the Gamma(z) = 1/z + gamma slip.
HPReal c3();
/// The matching legacy constant 3g^2/(2l) - g1/l + pi^2/(12 l) + 2g b0 + c1.
HPReal c2();
/// l * b0: the log s coefficient of the z = 0 residue is -c3_exact()/l.
HPReal c3_exact();
/// Constant of the z = 0 residue: (pi^2/12 - g^2/2 - g1)/l + b1.
HPReal c2_exact();

// -- residues and corrections --------------------------------------------------

HPReal residue_z0(const HPReal& s);
/// L^2/(2l) - c3 L / l + c2, with the legacy constants.
HPReal residue_z0_legacy(const HPReal& s);
HPReal residue_zm1(const HPReal& s);

/// Residue pieces at z = -4n: g(s) = sum (alpha_n - beta_n log s) s^{4n}.
HPReal g_alpha(int n);
HPReal g_beta(int n);
/// beta_n with zeta(1-4n) replaced by B_{2n}/(4n).
HPReal g_beta_with_b2n(int n);
HPReal g_correction(const HPReal& s, int n_max = 5);

/// Coefficient of s^{-s(n,k)} in h(s), s(n,k) a pole of zeta_F off the real axis.
HPComplex h_coefficient(int n, int k);
HPReal h_correction(const HPReal& s, int k_max = 6, int n_max = 10);
HPReal h_k0(const HPReal& s);
const PeriodicLine& fib_line();

/// log s - s/2
HPReal log1mexp_expansion(const HPReal& s);
HPReal log_gen_F2(const HPReal& s);
LogGenExpansion expansion_F2();

/// -sum log(1 - e^{-s p}) over parts p <= parts_limit.
HPReal log_gen_direct(const HPReal& s, const BigInt& parts_limit);
/// Same with the part list long enough that the omitted tail is below 10^-(D+5).
HPReal log_gen_direct(const HPReal& s);
HPReal log_gen_direct(const RecurrenceSpec& spec, const HPReal& s);
BigInt direct_parts_limit(const HPReal& s);

// -- general recurrence ----------------------------------------------------------

/// Mean of the periodic part of n(s) s: a = B0 over the used parts.
HPReal rec_a(const RecurrenceSpec& spec);
/// Constant term K_P of the z = 0 residue over the used parts.
HPReal c2_general(const RecurrenceSpec& spec);
/// The legacy closed form C_2 for the same recurrence.
HPReal c2_general_legacy(const RecurrenceSpec& spec);
/// min(log(beta/|beta_2|)/log beta, 0.99)
HPReal rec_error_order(const RecurrenceSpec& spec);
/// -zeta_parts(-1)/2: the z = -1 residue is -n_shift * s.
HPReal rec_n_shift(const RecurrenceSpec& spec);
const PeriodicLine& rec_line(const RecurrenceSpec& spec);
HPReal log_gen_P(const RecurrenceSpec& spec, const HPReal& s);
LogGenExpansion expansion_P(const RecurrenceSpec& spec);

}  // namespace recurpart
