#include "recurpart/errors.hpp"
#include "recurpart/special.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace recurpart {

namespace mp = boost::multiprecision;

HPReal euler_gamma() {
  return cached_constant("euler_gamma", [] {
    // Brent-McMillan: gamma = U/V - log n with error O(e^{-4n}).
    const long n = static_cast<long>(std::ceil((carried_digits() + 5) * std::log(10.0) / 4)) + 1;
    const HPReal n2 = HPReal(n) * n;
    const HPReal eps = pow10_neg(carried_digits() + 2);
    HPReal a = -mp::log(HPReal(n));
    HPReal b = 1;
    HPReal u = a;
    HPReal v = b;
    for (long k = 1;; ++k) {
      b = b * n2 / (HPReal(k) * k);
      a = (a * n2 / k + b) / k;
      u += a;
      v += b;
      if (k > n && mp::abs(a) < eps * mp::abs(u) && b < eps * v) break;
    }
    return HPReal(u / v);
  });
}

HPReal stieltjes_gamma1() {
  return cached_constant("stieltjes_gamma1", [] {
    const int m = std::max(50, carried_digits());
    const HPReal logm = mp::log(HPReal(m));
    HPReal s = 0;
    for (int k = 2; k <= m; ++k) s += mp::log(HPReal(k)) / k;
    HPReal g1 = s - logm * logm / 2 - logm / (2 * m);
    const HPReal eps = pow10_neg(carried_digits() + 2);
    HPReal h = 0;  // H_{2j-1}
    HPReal mpow = HPReal(m) * m;
    for (int j = 1; j < 400; ++j) {
      h += HPReal(1) / (2 * j - 1);
      if (j > 1) h += HPReal(1) / (2 * j - 2);
      HPReal term = bernoulli_hp(2 * j) * (logm - h) / (HPReal(2 * j) * mpow);
      g1 += term;
      if (mp::abs(term) < eps) return g1;
      mpow *= HPReal(m) * m;
    }
    throw NoConvergence("gamma_1 tail did not settle");
  });
}

HPReal harmonic(int n) {
  HPReal h = 0;
  for (int k = 1; k <= n; ++k) h += HPReal(1) / k;
  return h;
}

HPReal factorial_hp(int n) {
  HPReal f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

HPComplex binom(const HPComplex& a, int k) {
  HPComplex r(1);
  for (int j = 0; j < k; ++j) r = r * (a - HPComplex(j)) / HPReal(j + 1);
  return r;
}

RationalB bernoulli(int m) {
  if (m < 0) throw DomainError("bernoulli index must be nonnegative");
  if (m > 1 && (m & 1)) return RationalB(0);
  static std::mutex mu;
  static std::vector<RationalB> table{RationalB(1), RationalB(-1, 2)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(table.size()) <= m) {
    const int mm = static_cast<int>(table.size());
    if (mm & 1) {
      table.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    RationalB sum = 0;
    BigInt c = 1;  // C(m+1, k)
    for (int k = 0; k < mm; ++k) {
      if (k == 1 || !(k & 1)) sum += RationalB(c) * table[k];
      c = c * (mm + 1 - k) / (k + 1);
    }
    table.push_back(-sum / RationalB(mm + 1));
  }
  return table[m];
}

HPReal bernoulli_hp(int m) {
  return cached_constant("bernoulli_" + std::to_string(m), [m] { return to_hp(bernoulli(m)); });
}

}  // namespace recurpart
