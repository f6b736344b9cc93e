/**
 * @file special.hpp
 * @brief Gamma, Riemann zeta, Bernoulli numbers, Lambert W and the constants
 *        gamma and gamma_1, all at the working precision.
 */
#pragma once

#include "recurpart/hp.hpp"

namespace recurpart {

using RationalB = Rational;

struct LaurentPair {
  HPReal residue;
  HPReal constant;
};

/// Coefficients of zeta(1+z) = leading/z + constant + linear*z + ...
struct ZetaLaurentOne {
  HPReal leading;
  HPReal constant;
  HPReal linear;
};

// -- constants --------------------------------------------------------------

/// Euler-Mascheroni constant by the Brent-McMillan sum.
HPReal euler_gamma();
/// Stieltjes gamma_1 from sum_{k<=m} log k / k - (log m)^2 / 2 with the
/// Euler-Maclaurin tail added back in closed form.
HPReal stieltjes_gamma1();
/// H_n
HPReal harmonic(int n);
HPReal factorial_hp(int n);
/// Generalized binomial binom(a, k) as prod_{j<k} (a - j)/(j + 1).
HPComplex binom(const HPComplex& a, int k);

// -- Bernoulli --------------------------------------------------------------

/// B_m with B_1 = -1/2; odd m > 1 give 0.
RationalB bernoulli(int m);
HPReal bernoulli_hp(int m);

// -- Gamma ------------------------------------------------------------------

HPComplex gamma(const HPComplex& z);
HPReal gamma(const HPReal& x);
/// Leading Laurent coefficients of Gamma at -n.
LaurentPair gamma_laurent_at_neg(int n);

// -- zeta -------------------------------------------------------------------

HPComplex riemann_zeta(const HPComplex& z);
HPReal riemann_zeta(const HPReal& x);
/// zeta'(x) for real x > 1.
HPReal riemann_zeta_deriv(const HPReal& x);
/// zeta'(-m) for m >= 1, from the derivative of the functional equation.
HPReal zeta_deriv_neg(int m);
ZetaLaurentOne zeta_laurent_at_one();

// -- Lambert W --------------------------------------------------------------

HPReal lambert_w(const HPReal& x);
/// log x - log log x + log log x / log x, for x > e.
HPReal lambert_w_asymptotic(const HPReal& x);

}  // namespace recurpart
