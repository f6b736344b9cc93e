/**
 * @file zetarec.hpp
 * @brief Zeta functions of recurrence sequences, zeta_P(z) = sum_{k>=1} P_k^{-z}.
 *
 * zeta_F is the Fibonacci case (F_1 = F_2 = 1 both counted). Continuations
 * follow from the binomial expansion of the Binet form.
 */
#pragma once

#include "recurpart/errors.hpp"
#include "recurpart/hp.hpp"
#include "recurpart/seqkit.hpp"

#include <functional>
#include <map>
#include <vector>

namespace recurpart {

struct PoleSpec {
  HPComplex location;
  int order = 1;
  HPComplex residue;
  int n = 0;
  int k = 0;
  /// (m_2, ..., m_r): exponents of beta_j / beta. For r = 2 this is (k).
  std::vector<int> kvec;
};

struct LaurentData {
  HPComplex center;
  std::map<int, HPComplex> coeffs;
  HPReal radius_hint;
};

class NearPole : public ValidationError {
 public:
  NearPole(const std::string& what, PoleSpec p) : ValidationError(what), pole(std::move(p)) {}
  PoleSpec pole;
};

/// Distance under which an argument counts as sitting on a pole.
HPReal near_pole_radius();

/// (1/2 pi i) \oint f(z) (z - c)^{-order-1} dz by the trapezoid rule on a circle.
HPComplex contour_coefficient(const std::function<HPComplex(const HPComplex&)>& f,
                              const HPComplex& center, const HPReal& radius, int order = -1,
                              int nodes = 64);

// -- Fibonacci --------------------------------------------------------------

HPReal log_phi();
HPComplex zeta_fib_series(const HPComplex& z);
HPComplex zeta_fib_continued(const HPComplex& z);
/// s(n,k) = -2k + pi i (2n + k) / log phi
HPComplex fib_pole_location(int n, int k);
/// (-1)^k 5^{s/2} binom(-s, k) / log phi
HPComplex fib_pole_residue(int n, int k);
std::vector<PoleSpec> fib_poles(int k_max, int n_max);
/// c_1 = sum_{k>=1} (-1)^k / (k (phi^{2k} + (-1)^{k+1}))
HPReal fib_c1();
LaurentData zeta_fib_laurent0();
/// Residue of zeta_F at -4n.
HPReal fib_b_neg4n(int n);
/// Value at -4n of the part of the continuation that stays finite there.
HPReal fib_c_neg4n(int n);
/// Constant term c_{-4n} - A/2, without the derivative of the prefactor A(z).
HPReal fib_constant_neg4n_truncated(int n);
LaurentData zeta_fib_laurent_neg4n(int n);

// -- general recurrences ------------------------------------------------------

HPComplex zeta_rec_continued(const RecurrenceSpec& spec, const HPComplex& z);
/// Direct Dirichlet sum, Re z >= 0.05.
HPComplex zeta_rec_series(const RecurrenceSpec& spec, const HPComplex& z);

struct PoleBounds {
  int k1_max = 0;
  int n_max = 0;
};

std::vector<PoleSpec> rec_poles(const RecurrenceSpec& spec, PoleBounds bounds);
LaurentData zeta_rec_laurent0(const RecurrenceSpec& spec);
/// The order-1 remainder C_1 of zeta_rec_laurent0.
HPReal rec_C1(const RecurrenceSpec& spec);

/// Laurent data at 0 of sum over the parts actually used (k >= index_origin).
LaurentData zeta_parts_laurent0(const RecurrenceSpec& spec);
/// zeta over the used parts, at z = -1.
HPReal zeta_parts_at_minus_one(const RecurrenceSpec& spec);

}  // namespace recurpart
