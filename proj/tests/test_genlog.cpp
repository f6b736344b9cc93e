#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/errors.hpp"
#include "recurpart/genlog.hpp"
#include "recurpart/special.hpp"
#include "recurpart/zetarec.hpp"
#include "test_util.hpp"

using namespace recurpart;
using testutil::hp;
using testutil::near;
namespace mp = boost::multiprecision;

namespace {
// log(1 - e^{-s}) - log s + s/2, which is O(s^2)
HPReal tail(const HPReal& s) { return mp::log(-mp::expm1(-s)) - mp::log(s) + s / 2; }
}  // namespace

TEST_CASE("direct sums against mpmath") {
  CHECK(near(log_gen_direct(hp("0.1")), "7.4265243037911853670885776649038258589298097921483", 45));
  CHECK(near(log_gen_direct(hp("0.5")), "1.7495778131683677791811330219397977763596346827589", 45));
  CHECK(near(log_gen_direct(make_pell(), hp("0.1")),
             "5.4085820764570009197293067341550248231342093966533", 45));
}

TEST_CASE("constants") {
  const HPReal ell = log_phi();
  const HPReal l5 = mp::log(HPReal(5));
  CHECK(near(c3_exact(), (l5 - ell) / 2, 60));
  CHECK(near(c2_exact(), "1.6205249961544949141825451049525479722", 35));
  CHECK(near(c2_general(make_fibonacci()), c2_exact(), 40));
  const HPReal g = euler_gamma();
  const HPReal b0 = c3_exact() / ell;
  CHECK(near(c2() - c2_exact(),
             2 * g * g / ell + 2 * g * b0 - (ell - 3 * l5) / 12 - l5 * l5 / (8 * ell), 40));
  CHECK(near(c3() - c3_exact(), 2 * g, 60));
}

TEST_CASE("shift and mean for the two sample recurrences") {
  CHECK(near(rec_n_shift(make_pell()), hp("0.25"), 40));
  CHECK(near(rec_n_shift(make_fibonacci()), HPReal(1), 40));
  // parts start at F_2, so the constant drops by one
  CHECK(near(rec_a(make_fibonacci()), c3_exact() / log_phi() - 1, 40));
}

TEST_CASE("expansion matches the direct sum up to the e^{-s} tail") {
  for (const char* s : {"0.1", "0.03"}) {
    const HPReal x = hp(s);
    const HPReal d = log_gen_F2(x) - log_gen_direct(x) + tail(x);
    CHECK(mp::abs(d) < pow10_neg(29));
  }
  // five g terms leave about s^24 at s = 1/2
  const HPReal x = hp("0.5");
  CHECK(mp::abs(log_gen_F2(x) - log_gen_direct(x) + tail(x)) < pow10_neg(18));
}

TEST_CASE("tail is s^2/24 to leading order") {
  const HPReal s = hp("0.001");
  CHECK(mp::abs(tail(s) / (s * s) - HPReal(1) / 24) < hp("1e-4"));
}

TEST_CASE("periodic pieces") {
  CHECK(near(h_k0(hp("0.01")), "-4.2750642427575862099000160968243322093738803282579e-10", 55));
  const PeriodicLine& line = fib_line();
  const HPReal s = hp("0.0123");
  // one period in log s
  CHECK(near(line.value(s), line.value(s * mp::exp(line.ell)), 50));
  // mellin is -s d/ds
  const HPReal h = pow10_neg(25);
  const HPReal fd = -s * (line.value(s + h) - line.value(s - h)) / (2 * h);
  CHECK(near(line.mellin(s), fd, 30));
  const HPReal fd2 = s * (line.mellin(s + h) - line.mellin(s - h)) / (2 * h);
  CHECK(near(line.mellin2(s), -fd2, 30));
}

TEST_CASE("correction series") {
  // residue of the continuation at -4 times s^4
  const HPReal s = hp("0.5");
  const HPReal r = (g_alpha(1) - g_beta(1) * mp::log(s)) * mp::pow(s, 4);
  CHECK(near(r, "3.31853124404185490466699159646717643981e-05", 33));
  CHECK(mp::abs(h_correction(hp("0.1"))) < hp("1e-6"));
  CHECK(mp::abs(g_correction(hp("0.1"))) < hp("1e-5"));
}

TEST_CASE("pell expansion against the direct sum") {
  const RecurrenceSpec p = make_pell();
  const LogGenExpansion e = expansion_P(p);
  for (const char* s : {"0.05", "0.01"}) {
    const HPReal x = hp(s);
    const HPReal d = log_gen_P(p, x) - rec_n_shift(p) * x - log_gen_direct(p, x);
    CHECK(mp::abs(d) < 10 * mp::pow(x, e.error_order));
  }
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(log_gen_F2(HPReal(0)), ValidationError);
  CHECK_THROWS_AS(log_gen_direct(hp("-1")), ValidationError);
}
