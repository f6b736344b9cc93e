#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/errors.hpp"
#include "recurpart/special.hpp"
#include "recurpart/zetarec.hpp"
#include "test_util.hpp"

#include <mpfr.h>

using namespace recurpart;
using testutil::hp;
using testutil::near;
namespace mp = boost::multiprecision;

// Reference digits below were produced with mpmath at 50 digits.

TEST_CASE("euler gamma: two routes and a reference") {
  const HPReal g = euler_gamma();
  HPReal lib;
  mpfr_const_euler(lib.backend().data(), MPFR_RNDN);
  CHECK(near(g, lib, 70));
  CHECK(near(g, "0.57721566490153286060651209008240243104215933593992", 48));
}

TEST_CASE("stieltjes gamma1: closed sum vs contour coefficient of zeta(1+z)") {
  const HPReal g1 = stieltjes_gamma1();
  CHECK(near(g1, "-0.072815845483676724860586375874901319137736338334338", 48));
  // zeta(1+z) = 1/z + gamma - gamma1 z + ...
  const HPComplex lin = contour_coefficient(
      [](const HPComplex& z) { return riemann_zeta(HPComplex(1) + z); }, HPComplex(0), hp("0.5"), 1, 128);
  CHECK(near(-lin.re, g1, 40));
}

TEST_CASE("riemann zeta values") {
  CHECK(near(riemann_zeta(HPReal(3)), "1.2020569031595942853997381615114499907649862923405", 48));
  const HPComplex z = riemann_zeta(HPComplex(hp("0.5"), HPReal(14)));
  CHECK(near(z.re, "0.022241142609993589246213199203968626386786243194924", 48));
  CHECK(near(z.im, "-0.1032581232664500579023630955525738345075490304641", 48));
  CHECK(near(riemann_zeta(HPReal(0)), "-0.5", 60));
  CHECK(near(riemann_zeta(HPReal(-1)), -HPReal(1) / 12, 60));
  CHECK(mp::abs(riemann_zeta(HPReal(-2))) < pow10_neg(60));
  CHECK_THROWS_AS(riemann_zeta(HPReal(1)), PoleAtOne);
}

TEST_CASE("zeta derivatives") {
  CHECK(near(zeta_deriv_neg(3), "0.0053785763577743011444169742104138428956644397422955", 48));
  CHECK(near(zeta_deriv_neg(2), "-0.030448457058393270780251530471154776647000483544974", 48));
  CHECK(near(riemann_zeta_deriv(hp("2.5")), "-0.38734195032620997271199237593105101319948228874688", 48));
  CHECK_THROWS_AS(zeta_deriv_neg(0), DomainError);
}

TEST_CASE("gamma function") {
  const HPComplex g = gamma(HPComplex(hp("0.5"), HPReal(3)));
  CHECK(near(g.re, "0.021445670552430646059552802251604467201338310739074", 48));
  CHECK(near(g.im, "0.0068653648372616779142384938198630022077109803082214", 48));
  CHECK(near(gamma(hp("-2.5")), "-0.94530872048294188122568932444861076415869304326527", 48));
  CHECK(near(gamma(HPReal(10)), HPReal(362880), 55));
  // reflection
  const HPComplex z(hp("0.3"), hp("1.7"));
  const HPComplex lhs = gamma(z) * gamma(HPComplex(1) - z);
  const HPComplex rhs = HPComplex(hp_pi()) / sin(HPComplex(hp_pi()) * z);
  CHECK(near(abs(lhs - rhs), HPReal(0), 55));
  CHECK_THROWS_AS(gamma(HPReal(-3)), PoleAtNonpositiveInteger);
}

TEST_CASE("gamma laurent data at negative integers") {
  const LaurentPair p = gamma_laurent_at_neg(2);
  CHECK(near(p.residue, "0.5", 60));
  CHECK(near(p.constant, (HPReal(3) / 2 - euler_gamma()) / 2, 60));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(20) == Rational(-174611, 330));
  CHECK(bernoulli(7) == 0);
  CHECK(near(bernoulli_hp(20), "-529.12424242424242424242424242424242424242424242424", 45));
}

TEST_CASE("harmonic, factorial, binomial") {
  CHECK(near(harmonic(4), HPReal(25) / 12, 60));
  CHECK(near(factorial_hp(12), HPReal(479001600), 55));
  const HPComplex b = binom(HPComplex(HPReal(-3)), 2);
  CHECK(near(b.re, HPReal(6), 60));
}

TEST_CASE("lambert W") {
  CHECK(near(lambert_w(HPReal(10)), "1.7455280027406993830743012648753899115352881290809", 48));
  CHECK(near(lambert_w(hp("1e-5")), "0.0000099999000014999733338541558669000920210710034199283", 50));
  CHECK(near(lambert_w(mp::exp(HPReal(1))), HPReal(1), 60));
  CHECK(lambert_w(HPReal(0)) == 0);
  CHECK_THROWS_AS(lambert_w(HPReal(-1)), NegativeArgument);
  CHECK_THROWS_AS(lambert_w_asymptotic(HPReal(2)), TooSmall);
  const HPReal x = hp("1e8");
  CHECK(mp::abs(lambert_w_asymptotic(x) - lambert_w(x)) < hp("0.01"));
}

TEST_CASE("precision control") {
  {
    PrecisionScope scope(40);
    CHECK(working_digits() == 40);
    CHECK(near(euler_gamma(), "0.57721566490153286060651209008240243104215933593992", 45));
  }
  CHECK(working_digits() == kDefaultDigits);
  CHECK_THROWS_AS(set_working_digits(20), PrecisionTooLow);
}
