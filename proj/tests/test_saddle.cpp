#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "recurpart/errors.hpp"
#include "recurpart/genlog.hpp"
#include "recurpart/saddle.hpp"
#include "recurpart/zetarec.hpp"
#include "test_util.hpp"

using namespace recurpart;
using testutil::hp;
using testutil::near;
namespace mp = boost::multiprecision;

TEST_CASE("saddle equation") {
  CHECK(near(n_of_alpha(hp("1e-3")), "14528.191826078503989623917998569044751378792143607", 45));
  const HPReal a = solve_alpha(HPReal(10000));
  CHECK(near(a, "0.0013851516275133973358198978044243695659164387282464", 50));
  CHECK(near(n_of_alpha(a), HPReal(10000), 50));
}

TEST_CASE("saddle equation is minus the derivative of the log generating function") {
  const SaddleModel& m = fibonacci_model();
  const HPReal s = hp("0.004");
  const HPReal h = pow10_neg(22);
  const HPReal fd = -(m.log_gen(s + h) - m.log_gen(s - h)) / (2 * h);
  // log_gen carries O(s^2) corrections the saddle model leaves out
  CHECK(mp::abs(fd - n_of_alpha(m, s)) < hp("1e-3"));
}

TEST_CASE("dn/ds against a finite difference") {
  for (const char* a : {"1e-3", "2.5e-5"}) {
    const HPReal x = hp(a);
    const HPReal h = x * pow10_neg(20);
    const HPReal fd = (n_of_alpha(x + h) - n_of_alpha(x - h)) / (2 * h);
    const HPReal d = dn_ds_at(x);
    CHECK(mp::abs(fd / d - 1) < pow10_neg(25));
    CHECK(d < 0);
  }
  // the leading term dominates for small alpha
  const HPReal x = hp("1e-30");
  CHECK(mp::abs(dn_ds_at(x) / dn_ds_leading(x) - 1) < hp("0.1"));
}

TEST_CASE("solver errors") {
  CHECK_THROWS_AS(solve_alpha(HPReal(1)), ValidationError);
  CHECK_THROWS_AS(n_of_alpha(HPReal(0)), DomainError);
}

TEST_CASE("psi tables") {
  const PeriodicTable& t0 = build_psi0();
  const PeriodicTable& t1 = build_psi1();
  CHECK(t0.stabilized);
  CHECK(t0.values.size() >= 256);
  CHECK(t0.closed_form_residual < hp("1e-6"));
  CHECK(t0.endpoint_mismatch < hp("1e-6"));

  // entries are saddle samples at n = exp((m + i/N) l)
  const HPReal ell = log_phi();
  const int N = static_cast<int>(t1.values.size());
  for (int i : {0, 17, 200}) {
    const HPReal n = mp::exp((HPReal(t1.generation_m) + HPReal(i) / N) * ell);
    const HPReal a = solve_alpha(n);
    CHECK(near(t1.values[i], h_k0(a), 40));
    CHECK(near(t0.values[i], psi0_from_saddle(ell, n, a), 40));
  }

  // one period in log n
  const HPReal n = hp("12345678.9");
  CHECK(near(t0.at_n(n), t0.at_n(n * mp::exp(ell)), 40));
}

TEST_CASE("alpha estimate and log alpha squared") {
  const PeriodicTable& t0 = build_psi0();
  for (const char* s : {"1e6", "1e12"}) {
    const HPReal n = hp(s);
    const HPReal a = solve_alpha(n);
    const HPReal est = alpha_estimate(n, t0);
    CHECK(mp::abs(est / a - 1) < hp("1e-3"));
    const HPReal la = mp::log(a);
    const HPReal X = mp::log(n);
    const HPReal bound = 20 * mp::pow(mp::log(X), 2) / X;
    CHECK(mp::abs(log_alpha_sq_expansion(n, t0) - la * la) < bound);
  }
  // dropping the periodic term makes the three-term form worse
  const HPReal n = hp("1e12");
  const HPReal la = mp::log(solve_alpha(n));
  const HPReal with = mp::abs(log_alpha_sq_expansion(n, t0) - la * la);
  const HPReal without = mp::abs(log_alpha_sq_expansion(n, HPReal(0), log_phi()) - la * la);
  CHECK(with < without);
}

TEST_CASE("pell model") {
  const SaddleModel m = recurrence_model(make_pell());
  CHECK(near(m.n_shift, hp("0.25"), 40));
  const HPReal a = solve_alpha(m, HPReal(100000));
  CHECK(near(n_of_alpha(m, a), HPReal(100000), 45));
  auto t = build_psi(m, 0, relaxed_psi_options());
  CHECK(t->values.size() == 256);
}
