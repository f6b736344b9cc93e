/**
 * @file hp.hpp
 * @brief Runtime-precision real and complex scalars.
 *
 * Precision is process-wide: `set_working_digits(D)` makes every new HPReal
 * carry D + kGuardDigits decimal digits. Results are trusted to 10^-(D-10).
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <functional>
#include <string>
#include <type_traits>

namespace recurpart {

using HPReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

constexpr int kGuardDigits = 10;
constexpr int kMinDigits = 32;
constexpr int kDefaultDigits = 64;

/// User-facing precision D.
int working_digits();
/// Digits actually carried by new HPReal values (D + guard).
int carried_digits();
void set_working_digits(int digits);

class PrecisionScope {
 public:
  explicit PrecisionScope(int digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

/// 10^-k
HPReal pow10_neg(int k);
/// Tolerance 10^-(D - offset) at the current precision.
HPReal tol(int offset);

HPReal hp_pi();
HPReal hp_log2();
HPReal hp_from_string(const std::string& s);
HPReal to_hp(const BigInt& v);
HPReal to_hp(const Rational& v);
inline HPReal hp_max(const HPReal& a, const HPReal& b) { return a < b ? b : a; }
inline HPReal hp_min(const HPReal& a, const HPReal& b) { return b < a ? b : a; }
/// Nearest integer not below x.
BigInt ceil_to_bigint(const HPReal& x);
/// Exact binomial coefficient C(n, k), 0 outside 0 <= k <= n.
BigInt binomial_int(long n, long k);

/// Copy rounded to the current carried precision.
HPReal rounded(const HPReal& x);

/// Scientific notation with `digits` significant digits (0 means carried precision).
std::string to_string(const HPReal& x, int digits = 0);

/// Cache of precision-dependent constants, keyed by name and carried digits.
HPReal cached_constant(const std::string& key, const std::function<HPReal()>& compute);

struct HPComplex {
  HPReal re;
  HPReal im;

  HPComplex() : re(0), im(0) {}
  HPComplex(const HPReal& r) : re(r), im(0) {}
  HPComplex(const HPReal& r, const HPReal& i) : re(r), im(i) {}
  template <class T, std::enable_if_t<std::is_arithmetic_v<T>, int> = 0>
  HPComplex(T r) : re(r), im(0) {}
  template <class T, class U,
            std::enable_if_t<std::is_arithmetic_v<T> && std::is_arithmetic_v<U>, int> = 0>
  HPComplex(T r, U i) : re(r), im(i) {}

  HPComplex& operator+=(const HPComplex& o);
  HPComplex& operator-=(const HPComplex& o);
  HPComplex& operator*=(const HPComplex& o);
  HPComplex& operator/=(const HPComplex& o);
};

HPComplex operator+(const HPComplex& a, const HPComplex& b);
HPComplex operator-(const HPComplex& a, const HPComplex& b);
HPComplex operator*(const HPComplex& a, const HPComplex& b);
HPComplex operator/(const HPComplex& a, const HPComplex& b);
HPComplex operator-(const HPComplex& a);
HPComplex operator*(const HPComplex& a, const HPReal& b);
HPComplex operator*(const HPReal& a, const HPComplex& b);
HPComplex operator/(const HPComplex& a, const HPReal& b);

HPComplex conj(const HPComplex& z);
HPReal abs(const HPComplex& z);
HPReal norm(const HPComplex& z);
HPReal arg(const HPComplex& z);
HPComplex exp(const HPComplex& z);
HPComplex log(const HPComplex& z);
HPComplex sqrt(const HPComplex& z);
HPComplex sin(const HPComplex& z);
HPComplex cos(const HPComplex& z);
/// Principal branch a^z.
HPComplex pow(const HPComplex& a, const HPComplex& z);
/// b^z for real b > 0.
HPComplex pow(const HPReal& b, const HPComplex& z);
HPComplex pow(const HPComplex& a, int k);
/// e^{i t}
HPComplex expi(const HPReal& t);

std::string to_string(const HPComplex& z, int digits = 0);

}  // namespace recurpart
