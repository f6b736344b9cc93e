#include "recurpart/genlog.hpp"

#include "recurpart/diag.hpp"
#include "recurpart/errors.hpp"
#include "recurpart/special.hpp"
#include "recurpart/zetarec.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace recurpart {

namespace mp = boost::multiprecision;

namespace {

HPReal cut_threshold() { return pow10_neg(working_digits() + 5); }

HPReal log5() {
  return cached_constant("log5", [] { return mp::log(HPReal(5)); });
}

void check_s(const HPReal& s, const char* who) {
  if (!(s > 0)) throw DomainError(std::string(who) + " needs s > 0");
}

// Periodic coefficients prefactor^{sigma} Gamma(sigma) zeta(1 + sigma) / ell,
// sigma = 2 pi i n / ell, until two in a row fall below the cut.
std::vector<HPComplex> periodic_coeffs(const HPReal& ell, const HPReal& log_prefactor,
                                       const std::string& tag) {
  std::vector<HPComplex> out;
  const HPReal thresh = cut_threshold();
  const HPReal omega = 2 * hp_pi() / ell;
  int quiet = 0;
  for (int n = 1; n < 400; ++n) {
    HPComplex sigma(HPReal(0), omega * n);
    HPComplex c = exp(sigma * log_prefactor) * gamma(sigma) *
                  riemann_zeta(HPComplex(1) + sigma) / ell;
    out.push_back(c);
    quiet = abs(c) < thresh ? quiet + 1 : 0;
    if (quiet >= 2) {
      diag::record_cut(tag, n);
      return out;
    }
  }
  throw NoConvergence("periodic coefficients of " + tag + " did not decay");
}

}  // namespace

// ---------------------------------------------------------------------------

HPReal PeriodicLine::value(const HPReal& s) const {
  const HPReal t = 2 * hp_pi() * mp::log(s) / ell;
  HPReal acc = 0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    acc += (coeffs[n] * expi(-t * HPReal(n + 1))).re;
  }
  return 2 * acc;
}

HPReal PeriodicLine::mellin(const HPReal& s) const {
  const HPReal omega = 2 * hp_pi() / ell;
  const HPReal t = omega * mp::log(s);
  HPReal acc = 0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    HPComplex sig(HPReal(0), omega * HPReal(n + 1));
    acc += (sig * coeffs[n] * expi(-t * HPReal(n + 1))).re;
  }
  return 2 * acc;
}

HPReal PeriodicLine::mellin2(const HPReal& s) const {
  const HPReal omega = 2 * hp_pi() / ell;
  const HPReal t = omega * mp::log(s);
  HPReal acc = 0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    HPReal w = omega * HPReal(n + 1);
    acc -= w * w * (coeffs[n] * expi(-t * HPReal(n + 1))).re;
  }
  return 2 * acc;
}

HPReal LogGenExpansion::evaluate(const HPReal& s) const {
  const HPReal L = mp::log(s);
  HPReal v = quad_coeff * L * L + lin_coeff * L + const_term;
  if (correction) v += correction(s);
  return v;
}

// ---------------------------------------------------------------------------
// constants

HPReal c3() {
  return cached_constant("genlog.c3", [] {
    return log5() / 2 - log_phi() / 2 + 2 * euler_gamma();
  });
}

HPReal c2() {
  return cached_constant("genlog.c2", [] {
    const HPReal lp = log_phi();
    const HPReal g = euler_gamma();
    const HPReal b0 = (log5() - lp) / (2 * lp);
    const HPReal pi = hp_pi();
    return 3 * g * g / (2 * lp) - stieltjes_gamma1() / lp + pi * pi / (12 * lp) + 2 * g * b0 +
           fib_c1();
  });
}

HPReal c3_exact() {
  return cached_constant("genlog.c3_exact", [] { return (log5() - log_phi()) / 2; });
}

HPReal c2_exact() {
  return cached_constant("genlog.c2_exact", [] {
    const HPReal lp = log_phi();
    const HPReal g = euler_gamma();
    const HPReal pi = hp_pi();
    const LaurentData z0 = zeta_fib_laurent0();
    return (pi * pi / 12 - g * g / 2 - stieltjes_gamma1()) / lp + z0.coeffs.at(1).re;
  });
}

// ---------------------------------------------------------------------------

HPReal residue_z0(const HPReal& s) {
  check_s(s, "residue_z0");
  const HPReal lp = log_phi();
  const HPReal L = mp::log(s);
  return L * L / (2 * lp) - c3_exact() * L / lp + c2_exact();
}

HPReal residue_z0_legacy(const HPReal& s) {
  check_s(s, "residue_z0_legacy");
  const HPReal lp = log_phi();
  const HPReal L = mp::log(s);
  return L * L / (2 * lp) - c3() * L / lp + c2();
}

HPReal residue_zm1(const HPReal& s) { return -s / 2; }

HPReal g_beta(int n) {
  if (n < 1) throw DomainError("g_beta needs n >= 1");
  const int m = 4 * n;
  // zeta(1 - m) = -B_m / m
  const HPReal zeta_val = -bernoulli_hp(m) / m;
  return fib_b_neg4n(n) * zeta_val / factorial_hp(m);
}

HPReal g_beta_with_b2n(int n) {
  if (n < 1) throw DomainError("g_beta_with_b2n needs n >= 1");
  const int m = 4 * n;
  return fib_b_neg4n(n) * bernoulli_hp(2 * n) / m / factorial_hp(m);
}

HPReal g_alpha(int n) {
  if (n < 1) throw DomainError("g_alpha needs n >= 1");
  const int m = 4 * n;
  const HPReal b = fib_b_neg4n(n);
  const HPReal f0 = zeta_fib_laurent_neg4n(n).coeffs.at(0).re;
  const HPReal zeta_val = -bernoulli_hp(m) / m;
  const HPReal fact = factorial_hp(m);
  return zeta_val * (b * (harmonic(m) - euler_gamma()) + f0) / fact +
         b * zeta_deriv_neg(m - 1) / fact;
}

HPReal g_correction(const HPReal& s, int n_max) {
  check_s(s, "g_correction");
  const HPReal L = mp::log(s);
  const HPReal s4 = mp::pow(s, 4);
  HPReal pw = 1;
  HPReal acc = 0;
  HPReal last = 0;
  for (int n = 1; n <= n_max; ++n) {
    pw *= s4;
    last = (g_alpha(n) - g_beta(n) * L) * pw;
    acc += last;
  }
  if (n_max >= 1 && mp::abs(last) > cut_threshold()) {
    std::ostringstream os;
    os << "g_correction: last kept term " << to_string(last, 6) << " exceeds the cut at n_max "
       << n_max;
    diag::warn(os.str());
  }
  return acc;
}

// ---------------------------------------------------------------------------
// h(s)

namespace {

struct HTable {
  int k_max = -1;
  int n_max = -1;
  // coeff[k][m-1] for m = 2n + k = 1, 2, ...; entries with m - k odd stay zero
  std::vector<std::vector<HPComplex>> coeff;
};

std::mutex h_mu;
std::map<int, HTable> h_tables;

HPComplex compute_h_coefficient(int n, int k) {
  const HPReal lp = log_phi();
  HPComplex sigma = fib_pole_location(n, k);
  HPComplex c = binom(-sigma, k) * exp(sigma * (log5() / 2)) * gamma(sigma) *
                riemann_zeta(HPComplex(1) + sigma) / lp;
  if (k & 1) c = -c;
  return c;
}

const HTable& h_table(int k_max, int n_max) {
  std::lock_guard<std::mutex> lock(h_mu);
  HTable& t = h_tables[carried_digits()];
  if (t.k_max >= k_max && t.n_max >= n_max) return t;
  HTable fresh;
  fresh.k_max = std::max(k_max, t.k_max);
  fresh.n_max = std::max(n_max, t.n_max);
  fresh.coeff.resize(fresh.k_max + 1);
  for (int k = 0; k <= fresh.k_max; ++k) {
    const int m_top = 2 * fresh.n_max + k;
    fresh.coeff[k].assign(m_top, HPComplex());
    for (int m = 1; m <= m_top; ++m) {
      if ((m - k) % 2 != 0) continue;
      const int n = (m - k) / 2;
      fresh.coeff[k][m - 1] = compute_h_coefficient(n, k);
    }
  }
  t = std::move(fresh);
  return t;
}

}  // namespace

HPComplex h_coefficient(int n, int k) {
  if (k < 0) throw DomainError("h_coefficient needs k >= 0");
  if (2 * n + k == 0) throw DomainError("h_coefficient: (n, k) sits on the real axis");
  return compute_h_coefficient(n, k);
}

HPReal h_correction(const HPReal& s, int k_max, int n_max) {
  check_s(s, "h_correction");
  if (k_max < 0 || n_max < 0) throw DomainError("h_correction needs k_max, n_max >= 0");
  const HTable& t = h_table(k_max, n_max);
  const HPReal lp = log_phi();
  const HPReal L = mp::log(s);
  const HPReal thresh = cut_threshold();
  HPReal acc = 0;
  for (int k = 0; k <= k_max; ++k) {
    const HPReal radial = mp::pow(s, 2 * k);
    int quiet = 0;
    for (int m = 1; m <= 2 * n_max + k; ++m) {
      if ((m - k) % 2 != 0) continue;
      // s^{-sigma} = s^{2k} e^{-i pi m log s / log phi}
      HPComplex term = t.coeff[k][m - 1] * expi(-hp_pi() * HPReal(m) * L / lp);
      HPReal v = 2 * radial * term.re;
      acc += v;
      quiet = abs(t.coeff[k][m - 1]) * radial < thresh ? quiet + 1 : 0;
      if (quiet >= 2) break;
    }
  }
  return acc;
}

const PeriodicLine& fib_line() {
  static std::mutex mu;
  static std::map<int, PeriodicLine> lines;
  std::lock_guard<std::mutex> lock(mu);
  auto it = lines.find(carried_digits());
  if (it != lines.end()) return it->second;
  PeriodicLine line;
  line.ell = log_phi();
  line.coeffs = periodic_coeffs(line.ell, log5() / 2, "h_k0");
  return lines.emplace(carried_digits(), std::move(line)).first->second;
}

HPReal h_k0(const HPReal& s) {
  check_s(s, "h_k0");
  return fib_line().value(s);
}

HPReal log1mexp_expansion(const HPReal& s) {
  check_s(s, "log1mexp_expansion");
  return mp::log(s) - s / 2;
}

HPReal log_gen_F2(const HPReal& s) {
  check_s(s, "log_gen_F2");
  HPReal v = residue_z0(s) + residue_zm1(s) + h_correction(s) + log1mexp_expansion(s);
  if (s < 1) v += g_correction(s);
  return v;
}

LogGenExpansion expansion_F2() {
  LogGenExpansion e;
  const HPReal lp = log_phi();
  e.quad_coeff = 1 / (2 * lp);
  e.lin_coeff = 1 - c3_exact() / lp;
  e.const_term = c2_exact();
  e.correction = [](const HPReal& s) {
    HPReal v = -s + h_correction(s);
    if (s < 1) v += g_correction(s);
    return v;
  };
  e.error_order = 2;
  return e;
}

// ---------------------------------------------------------------------------
// direct sums

BigInt direct_parts_limit(const HPReal& s) {
  check_s(s, "direct_parts_limit");
  // parts beyond P contribute at most about 2 e^{-s P}
  const HPReal need = (HPReal(working_digits() + 8) * mp::log(HPReal(10))) / s;
  return ceil_to_bigint(need);
}

HPReal log_gen_direct(const HPReal& s, const BigInt& parts_limit) {
  check_s(s, "log_gen_direct");
  HPReal acc = 0;
  for (const BigInt& p : parts_up_to(make_fibonacci(), parts_limit)) {
    acc -= mp::log(-mp::expm1(-s * to_hp(p)));
  }
  return acc;
}

HPReal log_gen_direct(const HPReal& s) { return log_gen_direct(s, direct_parts_limit(s)); }

HPReal log_gen_direct(const RecurrenceSpec& spec, const HPReal& s) {
  check_s(s, "log_gen_direct");
  HPReal acc = 0;
  for (const BigInt& p : parts_up_to(spec, direct_parts_limit(s))) {
    acc -= mp::log(-mp::expm1(-s * to_hp(p)));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// general recurrence

HPReal rec_a(const RecurrenceSpec& spec) { return zeta_parts_laurent0(spec).coeffs.at(0).re; }

HPReal c2_general(const RecurrenceSpec& spec) {
  const HPReal ell = spec.log_beta();
  const HPReal g = euler_gamma();
  const HPReal pi = hp_pi();
  return (pi * pi / 12 - g * g / 2 - stieltjes_gamma1()) / ell +
         zeta_parts_laurent0(spec).coeffs.at(1).re;
}

HPReal c2_general_legacy(const RecurrenceSpec& spec) {
  const HPReal ell = spec.log_beta();
  const HPReal g = euler_gamma();
  const HPReal pi = hp_pi();
  const HPReal ll = mp::log(spec.lambda());
  return (g * g + pi * pi / 6) / (2 * ell) + (g * g - stieltjes_gamma1()) / ell -
         (ll / ell + HPReal(1) / 2) * 2 * g +
         (ll * ll / (2 * ell) + ll / 2 + ell / 12 + rec_C1(spec));
}

HPReal rec_error_order(const RecurrenceSpec& spec) {
  const HPReal cap = HPReal(99) / 100;
  if (spec.degree < 2) return cap;
  const HPReal e = (spec.log_beta() - mp::log(spec.second_modulus())) / spec.log_beta();
  return hp_min(e, cap);
}

HPReal rec_n_shift(const RecurrenceSpec& spec) { return -zeta_parts_at_minus_one(spec) / 2; }

namespace {

LogGenExpansion build_expansion_P(const RecurrenceSpec& spec) {
  LogGenExpansion e;
  const HPReal ell = spec.log_beta();
  e.quad_coeff = 1 / (2 * ell);
  e.lin_coeff = -rec_a(spec);
  e.const_term = c2_general(spec);
  const PeriodicLine* line = &rec_line(spec);
  e.correction = [line](const HPReal& s) { return line->value(s); };
  e.error_order = rec_error_order(spec);
  return e;
}

}  // namespace

const PeriodicLine& rec_line(const RecurrenceSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, PeriodicLine> lines;
  const std::string key = cache_key(spec);
  std::lock_guard<std::mutex> lock(mu);
  auto it = lines.find(key);
  if (it != lines.end()) return it->second;
  PeriodicLine line;
  line.ell = spec.log_beta();
  line.coeffs = periodic_coeffs(line.ell, -mp::log(spec.lambda()), "f2:" + spec.label);
  return lines.emplace(key, std::move(line)).first->second;
}

LogGenExpansion expansion_P(const RecurrenceSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, LogGenExpansion> cache;
  const std::string key = cache_key(spec);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  LogGenExpansion e = build_expansion_P(spec);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, std::move(e)).first->second;
}

HPReal log_gen_P(const RecurrenceSpec& spec, const HPReal& s) {
  check_s(s, "log_gen_P");
  return expansion_P(spec).evaluate(s);
}

}  // namespace recurpart
