#include "recurpart/asymp.hpp"

#include "recurpart/errors.hpp"
#include "recurpart/genlog.hpp"
#include "recurpart/special.hpp"
#include "recurpart/zetarec.hpp"

namespace recurpart {

namespace mp = boost::multiprecision;

namespace {

HPReal half_log_2pi_ell(const HPReal& ell) { return mp::log(2 * hp_pi() * ell) / 2; }

void check_n(const BigInt& n) {
  if (n < 100) throw DomainError("asymptotic estimates need n >= 100");
}

AsymptoticEstimate assemble(const BigInt& n, const ClosedFormParts& cf) {
  AsymptoticEstimate e;
  e.n = n;
  const HPReal X = mp::log(to_hp(n));
  const HPReal Y = mp::log(X);
  e.A = mp::exp(cf.logA);
  e.B = cf.B;
  e.C = cf.C;
  e.log_value = cf.logA + cf.B * X + cf.C * Y;
  return e;
}

HPReal value_of(const ClosedFormParts& cf, const HPReal& n) {
  const HPReal X = mp::log(n);
  return cf.logA + cf.B * X + cf.C * mp::log(X);
}

}  // namespace

HPReal ck_assemble(const SaddleModel& model, const HPReal& n, const HPReal& alpha) {
  const HPReal slope = dn_ds_at(model, alpha);
  if (!(slope < 0)) throw DomainError("ck_assemble: dn/ds is not negative at alpha");
  return n * alpha + model.log_gen(alpha) - mp::log(2 * hp_pi()) / 2 - mp::log(-slope) / 2;
}

HPReal ck_assemble(const HPReal& n, const HPReal& alpha) {
  return ck_assemble(fibonacci_model(), n, alpha);
}

HPReal leading_log(const HPReal& n, const HPReal& ell) {
  if (!(n >= 2)) throw DomainError("leading_log needs n >= 2");
  const HPReal X = mp::log(n);
  return X * X / (2 * ell);
}

HPReal leading_log(const HPReal& n) { return leading_log(n, log_phi()); }

ClosedFormParts closed_form(const HPReal& n, const HPReal& ell, const HPReal& K,
                            const HPReal& psi0, const HPReal& psi1) {
  const HPReal X = mp::log(n);
  const HPReal Y = mp::log(X);
  const HPReal ll = mp::log(ell);
  const HPReal kappa = psi0 / ell - ll;
  const HPReal a = (psi0 - 2 * ell * ll) / (ell * ell);
  ClosedFormParts cf;
  cf.B = (X - 2 * Y + 2 * kappa + 2 - 2 * ell) / (2 * ell);
  cf.C = (Y - 2 * kappa + ell) / (2 * ell);
  cf.logA = ll * ll / (2 * ell) + a * ll - half_log_2pi_ell(ell) + K + psi1;
  return cf;
}

HPReal w_form(const HPReal& n, const HPReal& ell, const HPReal& a, const HPReal& K,
              const HPReal& psi1) {
  const HPReal w = lambert_w(n * ell * mp::exp(a * ell));
  return (w * w + 2 * w) / (2 * ell) - mp::log(n) + mp::log(w) - mp::log1p(w) / 2 -
         half_log_2pi_ell(ell) - a * a * ell / 2 + K + psi1;
}

ClosedFormParts theorem11_legacy(const HPReal& n, const HPReal& psi0, const HPReal& psi1) {
  const HPReal ell = log_phi();
  const HPReal X = mp::log(n);
  const HPReal Y = mp::log(X);
  const HPReal ll = mp::log(ell);
  const HPReal k3 = c3();
  ClosedFormParts cf;
  cf.logA = -half_log_2pi_ell(ell) + ll * ll / (2 * ell) + ll * (k3 / ell - 1) + c2() +
            2 * euler_gamma() + psi1;
  cf.B = (X - 2 * Y - 4 * psi0 / ell + 2 * ll + 2 * k3 - 4 * ell + 2) / (2 * ell);
  cf.C = (Y - 4 * psi0 / ell + 2 * ll - 2 * k3 + 3 * ell + 4) / (2 * ell);
  return cf;
}

ClosedFormParts theorem12_legacy(const RecurrenceSpec& spec, const HPReal& n, const HPReal& psi3,
                                 const HPReal& psi4) {
  const HPReal ell = spec.log_beta();
  const HPReal X = mp::log(n);
  const HPReal Y = mp::log(X);
  const HPReal ll = mp::log(ell);
  const HPReal g = euler_gamma();
  const HPReal lam = mp::log(spec.lambda());
  ClosedFormParts cf;
  cf.logA = -half_log_2pi_ell(ell) + ll * ll / (2 * ell) + (2 * g - lam) * ll / ell - ll / 2 +
            c2_general_legacy(spec) + psi4;
  cf.B = (X - 2 * Y - 4 * psi3 / ell + 2 * ll + 4 * g - 2 * lam - 2 * ell + 2) / (2 * ell);
  cf.C = (Y + 2 - 4 * psi3 / ell + 2 * ll - 4 * g + 2 * lam + 2 * ell + 2) / (2 * ell);
  return cf;
}

AsymptoticEstimate theorem11_estimate(const BigInt& n) {
  check_n(n);
  const SaddleModel& model = fibonacci_model();
  const HPReal N = to_hp(n);
  const HPReal psi0 = build_psi0().at_n(N);
  const HPReal psi1 = build_psi1().at_n(N);
  AsymptoticEstimate e = assemble(n, closed_form(N, model.ell, c2_exact(), psi0, psi1));
  e.spec_label = "fibonacci";

  const HPReal alpha = solve_alpha(model, N);
  e.components["alpha"] = alpha;
  e.components["psi0"] = psi0;
  e.components["psi1"] = psi1;
  e.components["n_alpha"] = N * alpha;
  e.components["log_gen_at_alpha"] = model.log_gen(alpha);
  e.components["neg_half_log_neg_dn_ds"] = -mp::log(-dn_ds_at(model, alpha)) / 2;
  e.components["ck_route"] = ck_assemble(model, N, alpha);
  e.components["w_form"] = w_form(N, model.ell, model.a, c2_exact(), psi1);
  e.components["legacy_route"] = value_of(theorem11_legacy(N, psi0, psi1), N);
  return e;
}

AsymptoticEstimate theorem12_estimate(const RecurrenceSpec& spec, const BigInt& n) {
  check_n(n);
  const SaddleModel model = recurrence_model(spec);
  const HPReal N = to_hp(n);
  const PsiBuildOptions opt = relaxed_psi_options();
  auto t0 = build_psi(model, 0, opt);
  auto t1 = build_psi(model, 1, opt);
  const HPReal psi3 = t0->at_n(N);
  const HPReal psi4 = t1->at_n(N);
  const HPReal K = c2_general(spec);
  AsymptoticEstimate e = assemble(n, closed_form(N, model.ell, K, psi3, psi4));
  e.spec_label = spec.label;

  const HPReal alpha = solve_alpha(model, N);
  const HPReal ck = ck_assemble(model, N, alpha);
  const HPReal legacy = value_of(theorem12_legacy(spec, N, psi3, psi4), N);
  e.components["alpha"] = alpha;
  e.components["psi3"] = psi3;
  e.components["psi4"] = psi4;
  e.components["psi_stabilized"] = (t0->stabilized && t1->stabilized) ? 1 : 0;
  e.components["n_alpha"] = N * alpha;
  e.components["log_gen_at_alpha"] = model.log_gen(alpha);
  e.components["neg_half_log_neg_dn_ds"] = -mp::log(-dn_ds_at(model, alpha)) / 2;
  e.components["ck_route"] = ck;
  e.components["w_form"] = w_form(N, model.ell, model.a, K, psi4);
  e.components["legacy_route"] = legacy;
  e.components["legacy_minus_ck"] = legacy - ck;
  return e;
}

}  // namespace recurpart
