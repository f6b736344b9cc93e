#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/asymp.hpp"
#include "recurpart/bigcount.hpp"
#include "recurpart/errors.hpp"
#include "recurpart/genlog.hpp"
#include "recurpart/special.hpp"
#include "recurpart/zetarec.hpp"
#include "test_util.hpp"

using namespace recurpart;
using testutil::hp;
using testutil::near;
namespace mp = boost::multiprecision;

TEST_CASE("leading term") {
  CHECK(near(leading_log(mp::exp(HPReal(1))), 1 / (2 * log_phi()), 60));
  const HPReal X = mp::log(HPReal(1000000));
  CHECK(near(leading_log(HPReal(1000000)), X * X / (2 * log_phi()), 60));
  CHECK(mp::abs(leading_log(HPReal(1000000)) - hp("198.32")) < hp("0.01"));
}

TEST_CASE("closed form is self consistent") {
  const AsymptoticEstimate e = theorem11_estimate(BigInt(50000));
  const HPReal X = mp::log(HPReal(50000));
  const HPReal Y = mp::log(X);
  CHECK(near(e.log_value, mp::log(e.A) + e.B * X + e.C * Y, 50));
  CHECK(e.spec_label == "fibonacci");
  for (const char* k : {"alpha", "psi0", "psi1", "ck_route", "w_form", "legacy_route"}) {
    CHECK(e.components.count(k) == 1);
  }
}

TEST_CASE("estimates track exact counts") {
  const CountTable t = count_table(make_fibonacci(), 100000);
  for (long long n : {1000LL, 10000LL, 100000LL}) {
    const AsymptoticEstimate e = theorem11_estimate(BigInt(n));
    const HPReal exact = log_count(t.counts[n]);
    const HPReal X = mp::log(HPReal(n));
    const HPReal Y = mp::log(X);
    CHECK(mp::abs(e.log_value - exact) < 5 * Y * Y / X);
    CHECK(mp::abs(e.components.at("ck_route") - exact) < hp("0.05"));
    // the closed form and the W form expand the same saddle value
    CHECK(mp::abs(e.log_value - e.components.at("w_form")) < 5 * Y * Y / X);
  }
}

TEST_CASE("ck assembly by hand") {
  const HPReal n(20000);
  const HPReal a = solve_alpha(n);
  const HPReal by_hand = n * a + log_gen_F2(a) -
                         mp::log(2 * hp_pi()) / 2 - mp::log(-dn_ds_at(a)) / 2;
  CHECK(near(ck_assemble(n, a), by_hand, 50));
}

TEST_CASE("closed form pieces") {
  const HPReal ell = log_phi();
  const HPReal n(1e8);
  const ClosedFormParts a = closed_form(n, ell, c2_exact(), HPReal(0), HPReal(0));
  const ClosedFormParts b = closed_form(n, ell, c2_exact(), hp("0.1"), HPReal(0));
  // psi0 enters B and C with opposite signs and log A through the mean
  CHECK(near(b.B - a.B, hp("0.1") / (ell * ell), 60));
  CHECK(near(b.C - a.C, -hp("0.1") / (ell * ell), 60));
  CHECK(near(b.logA - a.logA, hp("0.1") * mp::log(ell) / (ell * ell), 60));
  const ClosedFormParts c = closed_form(n, ell, c2_exact(), HPReal(0), hp("0.3"));
  CHECK(near(c.logA - a.logA, hp("0.3"), 60));
}

TEST_CASE("recurrence estimate reduces to the fibonacci one") {
  const AsymptoticEstimate a = theorem11_estimate(BigInt(10000));
  const AsymptoticEstimate b = theorem12_estimate(make_fibonacci(), BigInt(10000));
  // the general expansion drops O(s^2) terms the Fibonacci one keeps
  CHECK(mp::abs(a.components.at("ck_route") - b.components.at("ck_route")) < hp("1e-9"));
  CHECK(mp::abs(a.log_value - b.log_value) < hp("1e-6"));
}

TEST_CASE("pell estimate") {
  const RecurrenceSpec p = make_pell();
  const CountTable t = count_table(p, 10000);
  const AsymptoticEstimate e = theorem12_estimate(p, BigInt(10000));
  const HPReal exact = log_count(t.counts[10000]);
  CHECK(mp::abs(e.components.at("ck_route") - exact) < hp("0.05"));
  CHECK(e.components.count("legacy_minus_ck") == 1);
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(theorem11_estimate(BigInt(50)), DomainError);
  CHECK_THROWS_AS(leading_log(HPReal(1)), DomainError);
}
