#include "recurpart/hp.hpp"

#include "recurpart/errors.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace recurpart {

namespace {

int g_digits = kDefaultDigits;

struct DefaultPrecisionInit {
  DefaultPrecisionInit() { HPReal::default_precision(kDefaultDigits + kGuardDigits); }
} g_default_precision_init;

}  // namespace

int working_digits() { return g_digits; }

int carried_digits() { return g_digits + kGuardDigits; }

void set_working_digits(int digits) {
  if (digits < kMinDigits) {
    throw PrecisionTooLow("precision must be at least " + std::to_string(kMinDigits) +
                          " digits, got " + std::to_string(digits));
  }
  g_digits = digits;
  HPReal::default_precision(digits + kGuardDigits);
}

PrecisionScope::PrecisionScope(int digits) : saved_(g_digits) { set_working_digits(digits); }

PrecisionScope::~PrecisionScope() { set_working_digits(saved_); }

HPReal pow10_neg(int k) { return boost::multiprecision::pow(HPReal(10), -k); }

HPReal tol(int offset) { return pow10_neg(working_digits() - offset); }

HPReal hp_pi() {
  return cached_constant("pi", [] {
    HPReal r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
  });
}

HPReal hp_log2() {
  return cached_constant("log2", [] {
    HPReal r;
    mpfr_const_log2(r.backend().data(), MPFR_RNDN);
    return r;
  });
}

HPReal hp_from_string(const std::string& s) { return HPReal(s); }

HPReal to_hp(const BigInt& v) {
  HPReal r;
  mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

HPReal to_hp(const Rational& v) {
  HPReal r;
  mpfr_set_q(r.backend().data(), v.backend().data(), MPFR_RNDN);
  return r;
}

HPReal rounded(const HPReal& x) {
  HPReal r;
  mpfr_set(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

std::string to_string(const HPReal& x, int digits) {
  if (digits <= 0) digits = carried_digits();
  return x.str(digits, std::ios_base::scientific);
}

HPReal cached_constant(const std::string& key, const std::function<HPReal()>& compute) {
  static std::recursive_mutex mu;
  static std::map<std::pair<std::string, int>, HPReal> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto k = std::make_pair(key, carried_digits());
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  HPReal v = compute();
  cache.emplace(k, v);
  return v;
}

// ---------------------------------------------------------------------------

HPComplex& HPComplex::operator+=(const HPComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

HPComplex& HPComplex::operator-=(const HPComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

HPComplex& HPComplex::operator*=(const HPComplex& o) {
  *this = *this * o;
  return *this;
}

HPComplex& HPComplex::operator/=(const HPComplex& o) {
  *this = *this / o;
  return *this;
}

HPComplex operator+(const HPComplex& a, const HPComplex& b) { return {a.re + b.re, a.im + b.im}; }

HPComplex operator-(const HPComplex& a, const HPComplex& b) { return {a.re - b.re, a.im - b.im}; }

HPComplex operator*(const HPComplex& a, const HPComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

HPComplex operator/(const HPComplex& a, const HPComplex& b) {
  // Smith's scaling keeps intermediate magnitudes tame.
  if (boost::multiprecision::abs(b.re) >= boost::multiprecision::abs(b.im)) {
    HPReal r = b.im / b.re;
    HPReal d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  HPReal r = b.re / b.im;
  HPReal d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

HPComplex operator-(const HPComplex& a) { return {-a.re, -a.im}; }

HPComplex operator*(const HPComplex& a, const HPReal& b) { return {a.re * b, a.im * b}; }

HPComplex operator*(const HPReal& a, const HPComplex& b) { return {a * b.re, a * b.im}; }

HPComplex operator/(const HPComplex& a, const HPReal& b) { return {a.re / b, a.im / b}; }

HPComplex conj(const HPComplex& z) { return {z.re, -z.im}; }

HPReal norm(const HPComplex& z) { return z.re * z.re + z.im * z.im; }

HPReal abs(const HPComplex& z) {
  HPReal r;
  mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
  return r;
}

HPReal arg(const HPComplex& z) { return boost::multiprecision::atan2(z.im, z.re); }

HPComplex exp(const HPComplex& z) {
  HPReal m = boost::multiprecision::exp(z.re);
  return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

HPComplex log(const HPComplex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

HPComplex sqrt(const HPComplex& z) {
  if (z.re == 0 && z.im == 0) return {};
  HPReal m = abs(z);
  HPReal a = boost::multiprecision::sqrt((m + boost::multiprecision::abs(z.re)) / 2);
  if (z.re >= 0) return {a, z.im / (2 * a)};
  HPReal b = z.im >= 0 ? a : HPReal(-a);
  return {boost::multiprecision::abs(z.im) / (2 * a), b};
}

HPComplex sin(const HPComplex& z) {
  return {boost::multiprecision::sin(z.re) * boost::multiprecision::cosh(z.im),
          boost::multiprecision::cos(z.re) * boost::multiprecision::sinh(z.im)};
}

HPComplex cos(const HPComplex& z) {
  return {boost::multiprecision::cos(z.re) * boost::multiprecision::cosh(z.im),
          -boost::multiprecision::sin(z.re) * boost::multiprecision::sinh(z.im)};
}

HPComplex pow(const HPComplex& a, const HPComplex& z) {
  if (a.re == 0 && a.im == 0) return {};
  return exp(z * log(a));
}

HPComplex pow(const HPReal& b, const HPComplex& z) { return exp(z * boost::multiprecision::log(b)); }

HPComplex pow(const HPComplex& a, int k) {
  if (k < 0) return HPComplex(1) / pow(a, -k);
  HPComplex result(1);
  HPComplex base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

HPComplex expi(const HPReal& t) {
  return {boost::multiprecision::cos(t), boost::multiprecision::sin(t)};
}

std::string to_string(const HPComplex& z, int digits) {
  std::string im = to_string(z.im, digits);
  if (im.empty() || im[0] != '-') im = "+" + im;
  return to_string(z.re, digits) + im + "i";
}

BigInt binomial_int(long n, long k) {
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt ceil_to_bigint(const HPReal& x) {
  BigInt out;
  mpfr_get_z(out.backend().data(), x.backend().data(), MPFR_RNDU);
  return out;
}

}  // namespace recurpart
