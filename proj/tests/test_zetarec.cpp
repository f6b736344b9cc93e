#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/errors.hpp"
#include "recurpart/zetarec.hpp"
#include "test_util.hpp"

using namespace recurpart;
using testutil::hp;
using testutil::near;
namespace mp = boost::multiprecision;

// Frozen values below come from 50-digit mpmath sums and contour integrals.

TEST_CASE("fibonacci zeta, series and continuation") {
  const HPComplex z(2, 3);
  const HPComplex a = zeta_fib_series(z);
  const HPComplex b = zeta_fib_continued(z);
  CHECK(near(a.re, "1.7874291977545321141677960984279165330308138095425", 45));
  CHECK(near(a.im, "-0.16649783824895285617654056322244323506856049806288", 45));
  CHECK(near(b.re, a.re, 45));
  CHECK(near(b.im, a.im, 45));
  // reciprocal Fibonacci constant
  CHECK(near(zeta_fib_continued(HPComplex(1)).re,
             "3.359885666243177553172011302918927179688905133732", 45));
}

TEST_CASE("continuation left of the abscissa matches its own contour") {
  const HPComplex z(hp("-1.3"), hp("0.7"));
  const HPComplex v = zeta_fib_continued(z);
  const HPComplex c = contour_coefficient(
      [](const HPComplex& w) { return zeta_fib_continued(w); }, z, hp("0.25"), 0, 96);
  CHECK(near(v.re, c.re, 30));
  CHECK(near(v.im, c.im, 30));
}

TEST_CASE("poles") {
  const HPComplex p = fib_pole_location(1, 2);
  CHECK(near(p.re, HPReal(-4), 60));
  CHECK(near(p.im, 4 * hp_pi() / log_phi(), 60));
  CHECK_THROWS_AS(zeta_fib_continued(HPComplex(0)), NearPole);
  CHECK_THROWS_AS(zeta_fib_continued(HPComplex(-4)), NearPole);
  const auto poles = fib_poles(2, 1);
  CHECK(!poles.empty());
}

TEST_CASE("c1") {
  CHECK(near(fib_c1(), "-0.20436188340938606569306837484748208695966460607796", 45));
  CHECK(near(rec_C1(make_fibonacci()), fib_c1(), 40));
}

TEST_CASE("laurent data at zero agrees with a contour") {
  const LaurentData d = zeta_fib_laurent0();
  CHECK(near(d.coeffs.at(-1).re, 1 / log_phi(), 60));
  auto f = [](const HPComplex& w) { return zeta_fib_continued(w); };
  for (int order : {-1, 0, 1}) {
    const HPComplex c = contour_coefficient(f, HPComplex(0), hp("0.5"), order, 128);
    CHECK(near(d.coeffs.at(order).re, c.re, 25));
  }
}

TEST_CASE("laurent data at -4n") {
  auto f = [](const HPComplex& w) { return zeta_fib_continued(w); };
  const LaurentData d1 = zeta_fib_laurent_neg4n(1);
  CHECK(near(d1.coeffs.at(0).re, "0.1104140561913892838166914254781733654589", 35));
  CHECK(near(d1.coeffs.at(-1).re, fib_b_neg4n(1), 50));
  const HPComplex res = contour_coefficient(f, HPComplex(-4), hp("0.5"), -1, 128);
  CHECK(near(res.re, fib_b_neg4n(1), 25));
  const HPComplex con = contour_coefficient(f, HPComplex(-4), hp("0.5"), 0, 128);
  CHECK(near(con.re, d1.coeffs.at(0).re, 25));
  CHECK(near(zeta_fib_laurent_neg4n(2).coeffs.at(0).re,
             "0.03961219454090084123220841561473887481245", 35));
  // the prefactor-derivative term is what separates the two constants
  CHECK(mp::abs(fib_constant_neg4n_truncated(1) - d1.coeffs.at(0).re) > hp("0.01"));
}

TEST_CASE("pell zeta") {
  const RecurrenceSpec p = make_pell();
  CHECK(near(zeta_rec_series(p, HPComplex(2)).re,
             "1.2983798509551889528677157430446218808661568178777", 45));
  const HPComplex z(hp("0.6"), 2);
  const HPComplex a = zeta_rec_series(p, z);
  const HPComplex b = zeta_rec_continued(p, z);
  CHECK(near(a.re, b.re, 40));
  CHECK(near(a.im, b.im, 40));
  CHECK_THROWS_AS(zeta_rec_series(p, HPComplex(hp("0.01"))), AbscissaViolation);
}

TEST_CASE("general route reduces to the fibonacci route") {
  const RecurrenceSpec f = make_fibonacci();
  const HPComplex z(hp("-0.7"), hp("1.1"));
  const HPComplex a = zeta_rec_continued(f, z);
  const HPComplex b = zeta_fib_continued(z);
  CHECK(near(a.re, b.re, 40));
  CHECK(near(a.im, b.im, 40));
}

TEST_CASE("regularized sums of the parts at -1") {
  CHECK(near(zeta_parts_at_minus_one(make_pell()), hp("-0.5"), 40));
  CHECK(near(zeta_parts_at_minus_one(make_fibonacci()), HPReal(-2), 40));
}
