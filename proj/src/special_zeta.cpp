#include "recurpart/errors.hpp"
#include "recurpart/special.hpp"

#include <cmath>

namespace recurpart {

namespace mp = boost::multiprecision;

namespace {

HPReal bernoulli_over_factorial(int m) {
  return cached_constant("bern_fact_" + std::to_string(m),
                         [m] { return HPReal(bernoulli_hp(m) / factorial_hp(m)); });
}

long em_cutoff(const HPComplex& s) {
  double t = std::fabs(s.im.convert_to<double>());
  double a = std::fabs(s.re.convert_to<double>());
  return static_cast<long>(std::ceil(0.4 * (carried_digits() + 4) + t + 0.5 * a + 4));
}

// Euler-Maclaurin, valid away from s = 1 for Re s > -(2J-1).
HPComplex zeta_em(const HPComplex& s) {
  const long n_cut = em_cutoff(s);
  HPComplex acc;
  for (long n = 1; n < n_cut; ++n) {
    HPReal ln = mp::log(HPReal(n));
    acc += exp(-s * ln);
  }
  const HPReal log_n = mp::log(HPReal(n_cut));
  const HPComplex n_pow = exp(-s * log_n);  // N^{-s}
  const HPComplex n_pow1 = n_pow * HPReal(n_cut);
  acc += n_pow1 / (s - HPComplex(1));
  acc += n_pow / HPReal(2);

  const HPReal eps = pow10_neg(carried_digits() + 2);
  const HPReal inv_n2 = HPReal(1) / (HPReal(n_cut) * n_cut);
  HPComplex poch = s;  // s (s+1) ... (s+2j-2)
  HPComplex tail = n_pow1 * inv_n2;  // N^{1-s-2j}
  HPReal prev = -1;
  for (int j = 1; j < 2000; ++j) {
    HPComplex term = bernoulli_over_factorial(2 * j) * (poch * tail);
    HPReal size = abs(term);
    acc += term;
    HPReal scale = hp_max(HPReal(1), abs(acc));
    if (size <= eps * scale) return acc;
    if (prev >= 0 && size > prev && j > 4) {
      throw NoConvergence("Euler-Maclaurin tail for zeta diverged");
    }
    prev = size;
    poch = poch * (s + HPComplex(2 * j - 1)) * (s + HPComplex(2 * j));
    tail = tail * inv_n2;
  }
  throw NoConvergence("Euler-Maclaurin tail for zeta did not converge");
}

}  // namespace

HPComplex riemann_zeta(const HPComplex& z) {
  if (z.re == 1 && z.im == 0) throw PoleAtOne("zeta has a pole at 1");
  const HPReal half = HPReal(1) / 2;
  if (z.re > half || abs(z) < half) return zeta_em(z);
  // zeta(z) = 2^z pi^{z-1} sin(pi z / 2) Gamma(1-z) zeta(1-z)
  const HPReal pi = hp_pi();
  const HPComplex one_minus = HPComplex(1) - z;
  HPComplex chi = pow(HPReal(2), z) * pow(pi, z - HPComplex(1)) * sin(pi * z / HPReal(2)) *
                  gamma(one_minus);
  return chi * zeta_em(one_minus);
}

HPReal riemann_zeta(const HPReal& x) { return riemann_zeta(HPComplex(x)).re; }

HPReal riemann_zeta_deriv(const HPReal& x) {
  if (x <= 1) throw DomainError("riemann_zeta_deriv needs x > 1");
  const long n_cut = em_cutoff(HPComplex(x));
  HPReal acc = 0;
  for (long n = 2; n < n_cut; ++n) {
    HPReal ln = mp::log(HPReal(n));
    acc -= ln * mp::exp(-x * ln);
  }
  const HPReal log_n = mp::log(HPReal(n_cut));
  const HPReal n_pow = mp::exp(-x * log_n);
  const HPReal n_pow1 = n_pow * n_cut;
  const HPReal xm1 = x - 1;
  acc += n_pow1 * (-log_n / xm1 - 1 / (xm1 * xm1));
  acc -= log_n * n_pow / 2;

  const HPReal eps = pow10_neg(carried_digits() + 2);
  const HPReal inv_n2 = HPReal(1) / (HPReal(n_cut) * n_cut);
  HPReal poch = x;
  HPReal dlog = 1 / x;  // sum 1/(x+i) over the rising product
  HPReal tail = n_pow1 * inv_n2;
  for (int j = 1; j < 2000; ++j) {
    HPReal term = bernoulli_over_factorial(2 * j) * tail * poch * (dlog - log_n);
    acc += term;
    if (mp::abs(term) <= eps * hp_max(HPReal(1), mp::abs(acc))) return acc;
    poch *= (x + 2 * j - 1) * (x + 2 * j);
    dlog += 1 / (x + 2 * j - 1) + 1 / (x + 2 * j);
    tail *= inv_n2;
  }
  throw NoConvergence("Euler-Maclaurin tail for zeta' did not converge");
}

HPReal zeta_deriv_neg(int m) {
  if (m < 1) throw DomainError("zeta_deriv_neg needs m >= 1");
  const HPReal two_pi = 2 * hp_pi();
  if (!(m & 1)) {
    // zeta'(-2k) = (-1)^k (2k)! zeta(2k+1) / (2 (2 pi)^{2k})
    const int k = m / 2;
    HPReal v = factorial_hp(m) * riemann_zeta(HPReal(m + 1)) / (2 * mp::pow(two_pi, m));
    return (k & 1) ? HPReal(-v) : v;
  }
  // s = 1 - 2k: zeta'(s) = zeta(s) (log 2pi - H_{2k-1} + gamma) - chi(s) zeta'(2k),
  // chi(1-2k) = (-1)^k 2 (2k-1)! / (2 pi)^{2k}
  const int k = (m + 1) / 2;
  const HPReal zeta_s = -bernoulli_hp(2 * k) / (2 * k);
  HPReal chi = 2 * factorial_hp(2 * k - 1) / mp::pow(two_pi, 2 * k);
  if (k & 1) chi = -chi;
  return zeta_s * (mp::log(two_pi) - harmonic(2 * k - 1) + euler_gamma()) -
         chi * riemann_zeta_deriv(HPReal(2 * k));
}

ZetaLaurentOne zeta_laurent_at_one() { return {HPReal(1), euler_gamma(), -stieltjes_gamma1()}; }

}  // namespace recurpart
