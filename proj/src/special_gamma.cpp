#include "recurpart/errors.hpp"
#include "recurpart/special.hpp"

#include <cmath>

namespace recurpart {

namespace mp = boost::multiprecision;

namespace {

bool is_nonpositive_integer(const HPComplex& z) {
  return z.im == 0 && z.re <= 0 && mp::floor(z.re) == z.re;
}

// log Gamma(w) by the Stirling series, Re w large.
HPComplex stirling_log_gamma(const HPComplex& w) {
  const HPReal eps = pow10_neg(carried_digits() + 2);
  HPComplex lg = (w - HPComplex(HPReal(1) / 2)) * log(w) - w +
                 HPComplex(mp::log(2 * hp_pi()) / 2);
  const HPComplex w2 = w * w;
  HPComplex wpow = w;  // w^{2j-1}
  HPReal prev = -1;
  for (int j = 1; j < 1000; ++j) {
    HPComplex term = HPComplex(bernoulli_hp(2 * j) / (HPReal(2 * j) * (2 * j - 1))) / wpow;
    HPReal size = abs(term);
    if (prev >= 0 && size > prev) throw NoConvergence("Stirling series diverged before converging");
    lg += term;
    if (size < eps) return lg;
    prev = size;
    wpow *= w2;
  }
  throw NoConvergence("Stirling series did not converge");
}

}  // namespace

HPComplex gamma(const HPComplex& z) {
  if (is_nonpositive_integer(z)) {
    throw PoleAtNonpositiveInteger("Gamma has a pole at " + to_string(z.re, 10));
  }
  if (z.re < HPReal(1) / 2) {
    const HPReal pi = hp_pi();
    return HPComplex(pi) / (sin(pi * z) * gamma(HPComplex(1) - z));
  }
  // The smallest Stirling term is about e^{-2 pi |w|}.
  const int floor_for_digits = static_cast<int>(std::ceil(0.37 * (carried_digits() + 4)));
  const HPReal target = HPReal(std::max(working_digits() / 2, floor_for_digits));
  HPComplex w = z;
  HPComplex prod(1);
  while (w.re < target) {
    prod *= w;
    w += HPComplex(1);
  }
  return exp(stirling_log_gamma(w)) / prod;
}

HPReal gamma(const HPReal& x) { return gamma(HPComplex(x)).re; }

LaurentPair gamma_laurent_at_neg(int n) {
  if (n < 0) throw DomainError("gamma_laurent_at_neg needs n >= 0");
  HPReal res = HPReal(1) / factorial_hp(n);
  if (n & 1) res = -res;
  return {res, res * (harmonic(n) - euler_gamma())};
}

}  // namespace recurpart
