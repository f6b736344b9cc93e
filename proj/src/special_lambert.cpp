#include "recurpart/errors.hpp"
#include "recurpart/special.hpp"

namespace recurpart {

namespace mp = boost::multiprecision;

HPReal lambert_w(const HPReal& x) {
  if (x < 0) throw NegativeArgument("lambert_w is defined here for x >= 0 only");
  if (x == 0) return HPReal(0);
  const HPReal e = mp::exp(HPReal(1));
  HPReal w;
  if (x > e) {
    w = lambert_w_asymptotic(x);
  } else if (x < HPReal(1) / 4) {
    w = x - x * x + 3 * x * x * x / 2;
  } else {
    w = mp::log1p(x);
    w = w * (1 - mp::log1p(w) / (2 + w));
  }
  const HPReal eps = pow10_neg(carried_digits() - 2);
  for (int it = 0; it < 200; ++it) {
    // Halley step on f(w) = w e^w - x
    HPReal ew = mp::exp(w);
    HPReal f = w * ew - x;
    HPReal wp1 = w + 1;
    HPReal step = f / (ew * wp1 - (w + 2) * f / (2 * wp1));
    w -= step;
    if (mp::abs(step) <= eps * hp_max(HPReal(1), mp::abs(w))) {
      // one more polish step; Halley is cubic so this lands on the rounding floor
      ew = mp::exp(w);
      f = w * ew - x;
      wp1 = w + 1;
      w -= f / (ew * wp1 - (w + 2) * f / (2 * wp1));
      return w;
    }
  }
  throw NoConvergence("Halley iteration for W did not converge");
}

HPReal lambert_w_asymptotic(const HPReal& x) {
  const HPReal e = mp::exp(HPReal(1));
  if (x <= e) throw TooSmall("lambert_w_asymptotic needs x > e");
  HPReal l1 = mp::log(x);
  HPReal l2 = mp::log(l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace recurpart
