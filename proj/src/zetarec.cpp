#include "recurpart/zetarec.hpp"

#include "recurpart/diag.hpp"
#include "recurpart/special.hpp"

#include <cmath>

namespace recurpart {

namespace mp = boost::multiprecision;

namespace {

constexpr int kQuietRun = 5;  // consecutive negligible terms before a sum is cut

HPReal cut_threshold() { return pow10_neg(working_digits() + 5); }

HPReal log5() {
  return cached_constant("log5", [] { return HPReal(mp::log(HPReal(5))); });
}

HPReal phi() {
  return cached_constant("phi", [] { return HPReal((1 + mp::sqrt(HPReal(5))) / 2); });
}

std::string describe(const HPComplex& z) { return to_string(z, 12); }

}  // namespace

HPReal near_pole_radius() { return pow10_neg(6); }

HPComplex contour_coefficient(const std::function<HPComplex(const HPComplex&)>& f,
                              const HPComplex& center, const HPReal& radius, int order, int nodes) {
  HPComplex acc;
  const HPReal two_pi = 2 * hp_pi();
  for (int j = 0; j < nodes; ++j) {
    HPComplex u = radius * expi(two_pi * j / nodes);
    acc += f(center + u) * pow(u, -order);
  }
  return acc / HPReal(nodes);
}

// ---------------------------------------------------------------------------
// Fibonacci

HPReal log_phi() {
  return cached_constant("log_phi", [] { return HPReal(mp::log(phi())); });
}

HPComplex fib_pole_location(int n, int k) {
  return {HPReal(-2 * k), hp_pi() * (2 * n + k) / log_phi()};
}

HPComplex fib_pole_residue(int n, int k) {
  const HPComplex s = fib_pole_location(n, k);
  HPComplex r = pow(HPReal(5), s / HPReal(2)) * binom(-s, k) / log_phi();
  return (k & 1) ? -r : r;
}

std::vector<PoleSpec> fib_poles(int k_max, int n_max) {
  std::vector<PoleSpec> out;
  for (int k = 0; k <= k_max; ++k) {
    for (int n = -n_max; n <= n_max; ++n) {
      PoleSpec p;
      p.location = fib_pole_location(n, k);
      p.residue = fib_pole_residue(n, k);
      p.n = n;
      p.k = k;
      p.kvec = {k};
      out.push_back(p);
    }
  }
  return out;
}

namespace {

void check_fib_pole(const HPComplex& z) {
  const double re = z.re.convert_to<double>();
  const double im = z.im.convert_to<double>();
  const double lp = log_phi().convert_to<double>();
  const long kc = std::lround(-re / 2);
  for (long k = kc - 1; k <= kc + 1; ++k) {
    if (k < 0) continue;
    const long n = std::lround((im * lp / M_PI - static_cast<double>(k)) / 2);
    const HPComplex loc = fib_pole_location(static_cast<int>(n), static_cast<int>(k));
    if (abs(z - loc) < near_pole_radius()) {
      PoleSpec p;
      p.location = loc;
      p.n = static_cast<int>(n);
      p.k = static_cast<int>(k);
      p.kvec = {static_cast<int>(k)};
      p.residue = fib_pole_residue(p.n, p.k);
      throw NearPole("zeta_F evaluated within 1e-6 of the pole s(" + std::to_string(n) + "," +
                         std::to_string(k) + ") = " + describe(loc),
                     p);
    }
  }
}

}  // namespace

HPComplex zeta_fib_series(const HPComplex& z) {
  if (z.re < HPReal(5) / 100) throw AbscissaViolation("direct zeta_F sum needs Re z >= 0.05");
  const RecurrenceSpec fib = make_fibonacci();
  const HPReal sigma = z.re;
  const HPReal thresh = cut_threshold();
  // F_{k+j} >= F_k 1.6^j once k >= 4
  const HPReal geometric = 1 - mp::pow(HPReal(16) / 10, -sigma);
  HPComplex acc;
  for (long k = 1;; ++k) {
    const HPReal lf = mp::log(to_hp(term(fib, k)));
    acc += exp(-z * lf);
    if (k >= 4) {
      const HPReal next = mp::log(to_hp(term(fib, k + 1)));
      if (mp::exp(-sigma * next) / geometric < thresh) {
        diag::record_cut("zeta_fib_series", k);
        return acc;
      }
    }
  }
}

HPComplex zeta_fib_continued(const HPComplex& z) {
  check_fib_pole(z);
  const HPReal lp = log_phi();
  const HPReal phi2 = phi() * phi();
  const HPComplex phi_z = exp(z * lp);
  const HPReal thresh = cut_threshold();
  HPComplex acc = HPComplex(1) / (phi_z - HPComplex(1));
  HPComplex b(1);
  HPComplex pw = phi_z;
  int quiet = 0;
  for (int k = 1; k < 100000; ++k) {
    b = b * (-z - HPComplex(k - 1)) / HPReal(k);
    pw = pw * phi2;
    HPComplex den = pw + HPComplex((k & 1) ? 1 : -1);
    HPComplex t = b / den;
    acc += t;
    quiet = abs(t) < thresh ? quiet + 1 : 0;
    if (quiet >= kQuietRun) {
      diag::record_cut("zeta_fib_continued", k);
      return pow(HPReal(5), z / HPReal(2)) * acc;
    }
  }
  throw NoConvergence("zeta_F continuation sum did not settle at z = " + describe(z));
}

HPReal fib_c1() {
  return cached_constant("fib_c1", [] {
    const HPReal phi2 = phi() * phi();
    const HPReal thresh = cut_threshold();
    HPReal acc = 0;
    HPReal pw = 1;
    int quiet = 0;
    for (int k = 1;; ++k) {
      pw *= phi2;
      HPReal t = HPReal(1) / (HPReal(k) * (pw + ((k & 1) ? 1 : -1)));
      if (k & 1) t = -t;
      acc += t;
      quiet = mp::abs(t) < thresh ? quiet + 1 : 0;
      if (quiet >= kQuietRun) {
        diag::record_cut("fib_c1", k);
        return acc;
      }
    }
  });
}

LaurentData zeta_fib_laurent0() {
  const HPReal lp = log_phi();
  const HPReal l5 = log5();
  LaurentData d;
  d.center = HPComplex(0);
  d.coeffs[-1] = HPComplex(1 / lp);
  d.coeffs[0] = HPComplex((l5 - lp) / (2 * lp));
  d.coeffs[1] = HPComplex((lp - 3 * l5) / 12 + l5 * l5 / (8 * lp) + fib_c1());
  d.radius_hint = hp_pi() / lp;
  return d;
}

HPReal fib_b_neg4n(int n) {
  if (n < 1) throw DomainError("fib_b_neg4n needs n >= 1");
  HPReal c = to_hp(binomial_int(4 * n, 2 * n));
  return c / (mp::pow(HPReal(5), 2 * n) * log_phi());
}

HPReal fib_c_neg4n(int n) {
  if (n < 1) throw DomainError("fib_c_neg4n needs n >= 1");
  const HPReal lp = log_phi();
  HPReal acc = 0;
  for (int k = 0; k <= 4 * n; ++k) {
    if (k == 2 * n) continue;
    HPReal c = to_hp(binomial_int(4 * n, k));
    HPReal den = mp::exp(HPReal(2 * k - 4 * n) * lp) + ((k & 1) ? 1 : -1);
    acc += c / den;
  }
  return acc / mp::pow(HPReal(5), 2 * n);
}

HPReal fib_constant_neg4n_truncated(int n) {
  HPReal a = to_hp(binomial_int(4 * n, 2 * n)) / mp::pow(HPReal(5), 2 * n);
  return fib_c_neg4n(n) - a / 2;
}

LaurentData zeta_fib_laurent_neg4n(int n) {
  // Near -4n the k = 2n term is A(z) / (phi^{z+4n} - 1), A(z) = 5^{z/2} binom(-z, 2n);
  // its constant term is -A/2 + A'/log phi.
  const HPReal lp = log_phi();
  const HPReal a = to_hp(binomial_int(4 * n, 2 * n)) / mp::pow(HPReal(5), 2 * n);
  const HPReal a_prime = a * (log5() / 2 - (harmonic(4 * n) - harmonic(2 * n)));
  LaurentData d;
  d.center = HPComplex(-4 * n);
  d.coeffs[-1] = HPComplex(a / lp);
  d.coeffs[0] = HPComplex(fib_c_neg4n(n) - a / 2 + a_prime / lp);
  d.radius_hint = hp_pi() / lp;
  return d;
}

// ---------------------------------------------------------------------------
// general recurrences

namespace {

struct RecData {
  HPReal beta;
  HPReal ell;
  HPReal lambda;
  HPReal log_lambda;
  std::vector<HPComplex> rho;      // beta_j / beta
  std::vector<HPComplex> mu;       // lambda_j / lambda
  std::vector<HPReal> log_abs_rho;
  std::vector<HPReal> arg_rho;
  int k0 = 1;
  std::vector<HPReal> prefix_logs;  // log P_k, k < k0
};

RecData rec_data(const RecurrenceSpec& spec) {
  RecData d;
  d.beta = spec.dominant_root;
  d.ell = mp::log(d.beta);
  d.lambda = spec.lambda();
  d.log_lambda = mp::log(d.lambda);
  for (std::size_t j = 0; j < spec.conjugate_roots.size(); ++j) {
    HPComplex rho = spec.conjugate_roots[j] / d.beta;
    d.rho.push_back(rho);
    d.mu.push_back(spec.binet_coeffs[j + 1] / d.lambda);
    d.log_abs_rho.push_back(mp::log(abs(rho)));
    d.arg_rho.push_back(arg(rho));
  }
  // first k with sum_j |mu_j| |rho_j|^k <= 1/2
  for (int k = 1;; ++k) {
    HPReal s = 0;
    for (std::size_t j = 0; j < d.rho.size(); ++j) {
      s += abs(d.mu[j]) * mp::exp(k * d.log_abs_rho[j]);
    }
    if (s <= HPReal(1) / 2) {
      d.k0 = k;
      break;
    }
    if (k > 100000) throw NoConvergence("Binet perturbation never drops below 1/2");
  }
  for (int k = 1; k < d.k0; ++k) d.prefix_logs.push_back(mp::log(to_hp(term(spec, k))));
  return d;
}

// Calls f(m) for every m in N^parts with |m| = total.
template <class F>
void for_each_composition(int total, int parts, F&& f) {
  std::vector<int> m(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      m[idx] = left;
      f(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      m[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) f(m);
    return;
  }
  rec(0, total);
}

// prod_j rho_j^{m_j}, prod_j mu_j^{m_j}, and multinomial(|m|; m)
struct ShellTerm {
  HPComplex w;
  HPComplex coeff;
  HPComplex log_w;  // sum_j m_j (log|rho_j| + i arg rho_j)
};

ShellTerm shell_term(const RecData& d, const std::vector<int>& m, const std::vector<HPReal>& fact) {
  ShellTerm t;
  t.w = HPComplex(1);
  t.coeff = HPComplex(1);
  int total = 0;
  HPReal denom = 1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    t.w *= pow(d.rho[j], m[j]);
    t.coeff *= pow(d.mu[j], m[j]);
    t.log_w += HPComplex(m[j] * d.log_abs_rho[j], m[j] * d.arg_rho[j]);
    denom *= fact[m[j]];
    total += m[j];
  }
  t.coeff = t.coeff * (fact[total] / denom);
  return t;
}

std::vector<HPReal> factorials(int upto) {
  std::vector<HPReal> f(upto + 1);
  f[0] = 1;
  for (int i = 1; i <= upto; ++i) f[i] = f[i - 1] * i;
  return f;
}

HPComplex rec_pole_location(const RecData& d, const HPComplex& log_w, int n) {
  return HPComplex(log_w.re, log_w.im + 2 * hp_pi() * n) / d.ell;
}

}  // namespace

HPComplex zeta_rec_continued(const RecurrenceSpec& spec, const HPComplex& z) {
  const RecData d = rec_data(spec);
  const std::size_t parts = d.rho.size();
  const HPReal thresh = cut_threshold();
  const HPReal two_pi = 2 * hp_pi();

  HPComplex prefix;
  for (const auto& lp : d.prefix_logs) prefix += exp(-z * lp);

  const HPComplex beta_mz = exp(-z * d.ell);
  std::vector<HPReal> fact = factorials(64);
  HPComplex acc;
  HPComplex b(1);  // binom(-z, M)
  int quiet = 0;
  for (int M = 0; M < 20000; ++M) {
    if (M > 0) b = b * (-z - HPComplex(M - 1)) / HPReal(M);
    while (static_cast<int>(fact.size()) <= M) fact.push_back(fact.back() * HPReal(fact.size()));
    HPReal shell_max = 0;
    for_each_composition(M, static_cast<int>(parts), [&](const std::vector<int>& m) {
      ShellTerm st = shell_term(d, m, fact);
      // pole where beta^{-z} w = 1
      HPReal nr = (z.im * d.ell - st.log_w.im) / two_pi;
      int n = static_cast<int>(mp::round(nr).convert_to<long>());
      HPComplex loc = rec_pole_location(d, st.log_w, n);
      if (abs(z - loc) < near_pole_radius()) {
        PoleSpec p;
        p.location = loc;
        p.n = n;
        p.k = M;
        p.kvec = m;
        throw NearPole("zeta_P evaluated within 1e-6 of a pole at " + describe(loc), p);
      }
      HPComplex q = beta_mz * st.w;
      HPComplex t = b * st.coeff * pow(q, d.k0) / (HPComplex(1) - q);
      acc += t;
      shell_max = hp_max(shell_max, abs(t));
    });
    quiet = shell_max < thresh ? quiet + 1 : 0;
    if (quiet >= kQuietRun) {
      diag::record_cut("zeta_rec_continued", M);
      return prefix + exp(-z * d.log_lambda) * acc;
    }
  }
  throw NoConvergence("zeta_P expansion did not settle at z = " + describe(z));
}

HPComplex zeta_rec_series(const RecurrenceSpec& spec, const HPComplex& z) {
  if (z.re < HPReal(5) / 100) throw AbscissaViolation("direct zeta_P sum needs Re z >= 0.05");
  const HPReal sigma = z.re;
  const HPReal thresh = cut_threshold();
  const HPReal ratio = 1 + (spec.dominant_root - 1) / 2;
  const HPReal geometric = 1 - mp::pow(ratio, -sigma);
  HPComplex acc;
  for (long k = 1;; ++k) {
    const HPReal lp = mp::log(to_hp(term(spec, k)));
    acc += exp(-z * lp);
    if (k >= 8) {
      const HPReal next = mp::log(to_hp(term(spec, k + 1)));
      if (mp::exp(-sigma * next) / geometric < thresh) {
        diag::record_cut("zeta_rec_series", k);
        return acc;
      }
    }
  }
}

std::vector<PoleSpec> rec_poles(const RecurrenceSpec& spec, PoleBounds bounds) {
  const RecData d = rec_data(spec);
  const std::size_t parts = d.rho.size();
  std::vector<HPReal> fact = factorials(std::max(bounds.k1_max, 1) + 1);
  std::vector<PoleSpec> out;
  for (int M = 0; M <= bounds.k1_max; ++M) {
    for_each_composition(M, static_cast<int>(parts), [&](const std::vector<int>& m) {
      ShellTerm st = shell_term(d, m, fact);
      for (int n = -bounds.n_max; n <= bounds.n_max; ++n) {
        PoleSpec p;
        p.location = rec_pole_location(d, st.log_w, n);
        p.n = n;
        p.k = M;
        p.kvec = m;
        out.push_back(p);
      }
    });
  }
  // Residues by quadrature on a circle that excludes every other listed pole.
  auto f = [&spec](const HPComplex& z) { return zeta_rec_continued(spec, z); };
  for (std::size_t i = 0; i < out.size(); ++i) {
    HPReal radius = pow10_neg(3);
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (i == j) continue;
      HPReal dist = abs(out[i].location - out[j].location);
      if (dist > 0) radius = hp_min(radius, dist * 4 / 10);
    }
    out[i].residue = contour_coefficient(f, out[i].location, radius, -1, 64);
  }
  return out;
}

namespace {

// Order-1 coefficient at 0 of the full recurrence zeta.
HPReal rec_order1(const RecData& d) {
  const HPReal ell = d.ell;
  const HPReal cap = d.log_lambda + d.k0 * ell;
  HPReal order1 = ell / 12 - cap / 2 + cap * cap / (2 * ell);
  for (const auto& lp : d.prefix_logs) order1 -= lp;
  const std::size_t parts = d.rho.size();
  const HPReal thresh = cut_threshold();
  std::vector<HPReal> fact = factorials(64);
  HPComplex acc;
  int quiet = 0;
  for (int M = 1; M < 20000; ++M) {
    while (static_cast<int>(fact.size()) <= M) fact.push_back(fact.back() * HPReal(fact.size()));
    HPReal shell_max = 0;
    for_each_composition(M, static_cast<int>(parts), [&](const std::vector<int>& m) {
      ShellTerm st = shell_term(d, m, fact);
      HPComplex t = st.coeff * pow(st.w, d.k0) / (HPComplex(1) - st.w) / HPReal(M);
      if (M & 1) t = -t;
      acc += t;
      shell_max = hp_max(shell_max, abs(t));
    });
    quiet = shell_max < thresh ? quiet + 1 : 0;
    if (quiet >= kQuietRun) {
      diag::record_cut("rec_C1", M);
      return order1 + acc.re;
    }
  }
  throw NoConvergence("C_1 sum did not settle");
}

}  // namespace

HPReal rec_C1(const RecurrenceSpec& spec) {
  const RecData d = rec_data(spec);
  const HPReal base =
      d.log_lambda * d.log_lambda / (2 * d.ell) + d.log_lambda / 2 + d.ell / 12;
  return rec_order1(d) - base;
}

LaurentData zeta_rec_laurent0(const RecurrenceSpec& spec) {
  const RecData d = rec_data(spec);
  LaurentData out;
  out.center = HPComplex(0);
  out.coeffs[-1] = HPComplex(1 / d.ell);
  out.coeffs[0] = HPComplex(-d.log_lambda / d.ell - HPReal(1) / 2);
  out.coeffs[1] = HPComplex(rec_order1(d));
  out.radius_hint = 2 * hp_pi() / d.ell;
  return out;
}

LaurentData zeta_parts_laurent0(const RecurrenceSpec& spec) {
  LaurentData out = zeta_rec_laurent0(spec);
  for (int k = 1; k < spec.index_origin; ++k) {
    out.coeffs[0] -= HPComplex(1);
    out.coeffs[1] += HPComplex(mp::log(to_hp(term(spec, k))));
  }
  return out;
}

HPReal zeta_parts_at_minus_one(const RecurrenceSpec& spec) {
  HPReal v = zeta_rec_continued(spec, HPComplex(-1)).re;
  for (int k = 1; k < spec.index_origin; ++k) v -= to_hp(term(spec, k));
  return v;
}

}  // namespace recurpart
