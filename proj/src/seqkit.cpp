#include "recurpart/seqkit.hpp"

#include "recurpart/diag.hpp"
#include "recurpart/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace recurpart {

namespace mp = boost::multiprecision;

TermCache::TermCache(std::vector<long long> coeffs, std::vector<long long> initial)
    : coeffs_(std::move(coeffs)) {
  for (long long v : initial) terms_.emplace_back(v);
}

BigInt TermCache::term(long k) const {
  if (k < 1) throw DomainError("term index must be >= 1");
  std::lock_guard<std::mutex> lock(mu_);
  const std::size_t r = coeffs_.size();
  while (terms_.size() < static_cast<std::size_t>(k)) {
    BigInt next = 0;
    const std::size_t n = terms_.size();
    for (std::size_t i = 0; i < r; ++i) next += coeffs_[i] * terms_[n - 1 - i];
    terms_.push_back(std::move(next));
  }
  return terms_[k - 1];
}

HPReal RecurrenceSpec::log_beta() const { return mp::log(dominant_root); }

HPReal RecurrenceSpec::second_modulus() const {
  HPReal m = 0;
  for (const auto& b : conjugate_roots) m = hp_max(m, abs(b));
  return m;
}

// ---------------------------------------------------------------------------
// irreducibility

namespace {

using i128 = __int128;

// Monic polynomial, p[i] is the coefficient of x^i.
std::vector<i128> char_poly(const std::vector<long long>& coeffs) {
  const std::size_t r = coeffs.size();
  std::vector<i128> p(r + 1, 0);
  p[r] = 1;
  for (std::size_t i = 0; i < r; ++i) p[r - 1 - i] = -static_cast<i128>(coeffs[i]);
  return p;
}

i128 eval_poly(const std::vector<i128>& p, i128 x) {
  i128 v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

std::vector<long long> divisors(long long n) {
  n = n < 0 ? -n : n;
  std::vector<long long> d;
  for (long long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  return d;
}

bool has_integer_root(const std::vector<i128>& p) {
  if (p[0] == 0) return true;
  for (long long d : divisors(static_cast<long long>(p[0]))) {
    if (eval_poly(p, d) == 0 || eval_poly(p, -d) == 0) return true;
  }
  return false;
}

bool is_square(i128 v, i128& root) {
  if (v < 0) return false;
  auto s = static_cast<i128>(std::llround(std::sqrt(static_cast<long double>(v))));
  for (i128 c = s > 2 ? s - 2 : 0; c <= s + 2; ++c) {
    if (c * c == v) {
      root = c;
      return true;
    }
  }
  return false;
}

// x^4 + p3 x^3 + p2 x^2 + p1 x + p0 = (x^2 + a x + b)(x^2 + c x + d)
bool has_quadratic_factor(const std::vector<i128>& p) {
  const i128 p0 = p[0], p1 = p[1], p2 = p[2], p3 = p[3];
  for (long long bd : divisors(static_cast<long long>(p0))) {
    for (int sign : {1, -1}) {
      const i128 b = sign * static_cast<i128>(bd);
      const i128 d = p0 / b;
      if (d != b) {
        const i128 num = p1 - p3 * b;
        const i128 den = d - b;
        if (num % den != 0) continue;
        const i128 a = num / den;
        const i128 c = p3 - a;
        if (b + d + a * c == p2) return true;
      } else {
        if (p1 != p3 * b) continue;
        // a + c = p3, a c = p2 - 2b
        i128 disc = p3 * p3 - 4 * (p2 - 2 * b);
        i128 root;
        if (is_square(disc, root) && ((p3 + root) % 2 == 0)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool char_poly_irreducible(const std::vector<long long>& coeffs) {
  const auto p = char_poly(coeffs);
  const std::size_t r = coeffs.size();
  if (r > 4) throw DomainError("irreducibility test covers degree <= 4 only");
  if (r == 1) return true;
  if (has_integer_root(p)) return false;
  if (r == 4 && has_quadratic_factor(p)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// roots and Binet data

namespace {

HPComplex poly_value(const std::vector<long long>& coeffs, const HPComplex& x, HPComplex* deriv) {
  // x^r - c_1 x^{r-1} - ... - c_r by Horner, with derivative.
  HPComplex v(1);
  HPComplex dv(0);
  for (long long c : coeffs) {
    dv = dv * x + v;
    v = v * x - HPComplex(HPReal(c));
  }
  if (deriv) *deriv = dv;
  return v;
}

HPComplex newton_polish(const std::vector<long long>& coeffs, HPComplex x, bool real_root) {
  const HPReal eps = pow10_neg(carried_digits() - 1);
  if (real_root) x.im = 0;
  for (int it = 0; it < 400; ++it) {
    HPComplex d;
    HPComplex v = poly_value(coeffs, x, &d);
    HPComplex step = v / d;
    if (real_root) step.im = 0;
    x -= step;
    if (abs(step) <= eps * hp_max(HPReal(1), abs(x))) {
      HPComplex d2;
      HPComplex v2 = poly_value(coeffs, x, &d2);
      HPComplex s2 = v2 / d2;
      if (real_root) s2.im = 0;
      return x - s2;
    }
  }
  throw NoConvergence("Newton polish of a characteristic root did not converge");
}

RecurrenceSpec build_spec(const std::vector<long long>& coeffs, const std::vector<long long>& initial,
                          const std::string& label, int origin) {
  const std::size_t r = coeffs.size();
  if (r < 2) throw ValidationError("recurrence degree must be at least 2");
  if (initial.size() != r) throw ValidationError("need exactly r initial terms");
  if (initial[0] != 1) throw FirstTermNotOne("P_1 must equal 1");
  for (long long v : initial) {
    if (v <= 0) throw NotIncreasing("initial terms must be positive");
  }
  if (origin < 1) throw ValidationError("index origin must be >= 1");

  RecurrenceSpec spec;
  spec.coeffs = coeffs;
  spec.initial_terms = initial;
  spec.degree = static_cast<int>(r);
  spec.label = label;
  spec.index_origin = origin;
  spec.cache = std::make_shared<TermCache>(coeffs, initial);

  const long span = std::max<long>(64, 4 * static_cast<long>(r));
  for (long k = origin; k < origin + span; ++k) {
    if (spec.cache->term(k + 1) <= spec.cache->term(k)) {
      throw NotIncreasing("sequence is not strictly increasing at index " + std::to_string(k));
    }
  }

  if (r <= 4) {
    if (!char_poly_irreducible(coeffs)) {
      throw ReducibleCharPoly("characteristic polynomial factors over the rationals");
    }
  } else {
    std::string w = label + ": irreducibility not checked for degree " + std::to_string(r);
    spec.warnings.push_back(w);
    diag::warn(w);
  }

  // Double-precision starting points from the companion matrix.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(r, r);
  for (std::size_t i = 0; i < r; ++i) companion(0, i) = static_cast<double>(coeffs[i]);
  for (std::size_t i = 1; i < r; ++i) companion(i, i - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw NoConvergence("companion eigenvalue solve failed");
  std::vector<std::complex<double>> guesses(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(guesses.begin(), guesses.end(), [](const auto& a, const auto& b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.imag() > b.imag();
  });

  const double beta_d = guesses[0].real();
  if (std::abs(guesses[0].imag()) > 1e-9 * std::abs(guesses[0]) || beta_d <= 1.0 ||
      std::abs(guesses[1]) >= beta_d * (1 - 1e-12)) {
    throw NoDominantRoot("no simple positive real root of strictly largest modulus");
  }

  // Extra digits so that |sum lambda_j beta_j^k - P_k| stays tiny for k <= 64.
  const int extra = static_cast<int>(std::ceil(64 * std::log10(beta_d))) + 10;
  std::vector<HPComplex> roots(r);
  std::vector<HPComplex> lambdas(r);
  {
    PrecisionScope hi(working_digits() + extra);
    for (std::size_t i = 0; i < r; ++i) {
      HPComplex g(HPReal(guesses[i].real()), HPReal(guesses[i].imag()));
      roots[i] = newton_polish(coeffs, g, i == 0);
    }
    if (!(abs(roots[1]) < roots[0].re)) throw NoDominantRoot("dominant root is not strict");

    // P(x) = sum_k P_k x^k = Q(x)/R(x); lambda_i = -beta_i Q(1/beta_i) / R'(1/beta_i)
    std::vector<HPReal> q(r + 1, HPReal(0));
    for (std::size_t k = 1; k <= r; ++k) {
      BigInt v = initial[k - 1];
      for (std::size_t j = 1; j < k; ++j) v -= coeffs[j - 1] * BigInt(initial[k - j - 1]);
      q[k] = to_hp(v);
    }
    for (std::size_t i = 0; i < r; ++i) {
      HPComplex x = HPComplex(1) / roots[i];
      HPComplex qv(0), xp(1);
      for (std::size_t k = 1; k <= r; ++k) {
        xp *= x;
        qv += q[k] * xp;
      }
      HPComplex rd(0), xq(1);
      for (std::size_t j = 1; j <= r; ++j) {
        rd -= HPReal(static_cast<long long>(j) * coeffs[j - 1]) * xq;
        xq *= x;
      }
      lambdas[i] = -(roots[i] * qv) / rd;
    }
    lambdas[0].im = 0;

    const HPReal bound = pow10_neg(working_digits() - extra - 8);
    std::vector<HPComplex> powers(roots);
    for (long k = 1; k <= 64; ++k) {
      HPComplex sum(0);
      for (std::size_t i = 0; i < r; ++i) sum += lambdas[i] * powers[i];
      HPReal err = abs(sum - HPComplex(to_hp(spec.cache->term(k))));
      if (err >= bound) {
        throw NoConvergence("Binet reconstruction failed at k = " + std::to_string(k));
      }
      for (std::size_t i = 0; i < r; ++i) powers[i] *= roots[i];
    }
  }
  if (!(lambdas[0].re > 0)) throw ValidationError("dominant Binet coefficient is not positive");

  spec.dominant_root = rounded(roots[0].re);
  for (std::size_t i = 0; i < r; ++i) {
    HPComplex lam(rounded(lambdas[i].re), rounded(lambdas[i].im));
    spec.binet_coeffs.push_back(lam);
    if (i > 0) spec.conjugate_roots.emplace_back(rounded(roots[i].re), rounded(roots[i].im));
  }
  return spec;
}

}  // namespace

RecurrenceSpec make_recurrence(const std::vector<long long>& coeffs,
                               const std::vector<long long>& initial, const std::string& label,
                               int index_origin) {
  return build_spec(coeffs, initial, label, index_origin);
}

RecurrenceSpec make_recurrence(const std::vector<long long>& coeffs,
                               const std::vector<long long>& initial, const std::string& label) {
  return build_spec(coeffs, initial, label, 1);
}

RecurrenceSpec make_fibonacci() {
  static std::mutex mu;
  static std::map<int, RecurrenceSpec> built;
  std::lock_guard<std::mutex> lock(mu);
  auto it = built.find(carried_digits());
  if (it != built.end()) return it->second;
  RecurrenceSpec spec = build_spec({1, 1}, {1, 1}, "fibonacci", 2);
  built.emplace(carried_digits(), spec);
  return spec;
}

RecurrenceSpec make_pell() { return build_spec({2, 1}, {1, 2}, "pell", 1); }

BigInt term(const RecurrenceSpec& spec, long k) { return spec.cache->term(k); }

std::vector<BigInt> parts_up_to(const RecurrenceSpec& spec, const BigInt& limit) {
  std::vector<BigInt> parts;
  for (long k = spec.index_origin;; ++k) {
    BigInt t = spec.cache->term(k);
    if (t > limit) break;
    parts.push_back(std::move(t));
  }
  if (parts.empty()) diag::warn("EmptyParts: no term of " + spec.label + " is <= " + limit.str());
  return parts;
}

std::string cache_key(const RecurrenceSpec& spec) {
  std::ostringstream key;
  key << carried_digits() << ':' << spec.index_origin << ':';
  for (auto c : spec.coeffs) key << c << ',';
  key << ':';
  for (auto c : spec.initial_terms) key << c << ',';
  return key.str();
}

}  // namespace recurpart
