#include "recurpart/saddle.hpp"

#include "recurpart/diag.hpp"
#include "recurpart/errors.hpp"
#include "recurpart/special.hpp"
#include "recurpart/zetarec.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace recurpart {

namespace mp = boost::multiprecision;

const SaddleModel& fibonacci_model() {
  static std::mutex mu;
  static std::map<int, SaddleModel> models;
  std::lock_guard<std::mutex> lock(mu);
  auto it = models.find(carried_digits());
  if (it != models.end()) return it->second;
  SaddleModel m;
  m.label = "fibonacci";
  m.ell = log_phi();
  m.a = c3_exact() / m.ell - 1;
  m.n_shift = 1;
  m.line = &fib_line();
  m.log_gen = [](const HPReal& s) { return log_gen_F2(s); };
  return models.emplace(carried_digits(), std::move(m)).first->second;
}

SaddleModel recurrence_model(const RecurrenceSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, SaddleModel> models;
  const std::string key = cache_key(spec);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = models.find(key);
    if (it != models.end()) return it->second;
  }
  SaddleModel m;
  m.label = "rec:" + spec.label + ":" + key;
  m.ell = spec.log_beta();
  const LogGenExpansion e = expansion_P(spec);
  m.a = -e.lin_coeff;
  m.n_shift = rec_n_shift(spec);
  m.line = &rec_line(spec);
  const HPReal shift = m.n_shift;
  m.log_gen = [e, shift](const HPReal& s) { return e.evaluate(s) - shift * s; };
  std::lock_guard<std::mutex> lock(mu);
  return models.emplace(key, std::move(m)).first->second;
}

// ---------------------------------------------------------------------------

HPReal h0(const SaddleModel& model, const HPReal& s) {
  if (!(s > 0)) throw DomainError("h0 needs s > 0");
  return model.a + model.line->mellin(s);
}

HPReal h0(const HPReal& s) { return h0(fibonacci_model(), s); }

HPReal n_of_alpha(const SaddleModel& model, const HPReal& alpha) {
  if (!(alpha > 0)) throw DomainError("n_of_alpha needs alpha > 0");
  return (-mp::log(alpha) / model.ell + h0(model, alpha)) / alpha + model.n_shift;
}

HPReal n_of_alpha(const HPReal& alpha) { return n_of_alpha(fibonacci_model(), alpha); }

HPReal dn_ds_at(const SaddleModel& model, const HPReal& alpha) {
  if (!(alpha > 0)) throw DomainError("dn_ds_at needs alpha > 0");
  // h0'(s) s = -(s d/ds)^2 P
  const HPReal num = (mp::log(alpha) - 1) / model.ell - h0(model, alpha) -
                     model.line->mellin2(alpha);
  return num / (alpha * alpha);
}

HPReal dn_ds_at(const HPReal& alpha) { return dn_ds_at(fibonacci_model(), alpha); }

HPReal dn_ds_leading(const HPReal& alpha) {
  if (!(alpha > 0)) throw DomainError("dn_ds_leading needs alpha > 0");
  return mp::log(alpha) / (alpha * alpha * log_phi());
}

HPReal solve_alpha(const SaddleModel& model, const HPReal& n) {
  if (!(n >= 2)) throw DomainError("solve_alpha needs n >= 2");
  const HPReal a0 = mp::log(n) / (n * model.ell);
  HPReal lo = a0 / 2;
  HPReal hi = a0 * 2;
  auto f = [&](const HPReal& a) { return n_of_alpha(model, a) - n; };
  const HPReal flo = f(lo);
  const HPReal fhi = f(hi);
  if (!(flo > 0 && fhi < 0)) {
    std::ostringstream os;
    os << "solve_alpha: no sign change on [" << to_string(lo, 8) << ", " << to_string(hi, 8)
       << "] for n = " << to_string(n, 12);
    throw BracketFailure(os.str());
  }
  const HPReal ftol = n * tol(10);
  const HPReal xtol = pow10_neg(carried_digits() - 4);
  HPReal x = a0 * HPReal(3) / 4;
  for (int it = 0; it < 300; ++it) {
    const HPReal fx = f(x);
    if (mp::abs(fx) <= ftol) return x;
    if (fx > 0) lo = x; else hi = x;
    HPReal next = x - fx / dn_ds_at(model, x);
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (mp::abs(next - x) <= xtol * x) return next;
    x = next;
  }
  throw NoConvergence("solve_alpha: Newton iteration did not settle");
}

HPReal solve_alpha(const HPReal& n) { return solve_alpha(fibonacci_model(), n); }

HPReal phase_of(const HPReal& n, const HPReal& ell) {
  const HPReal x = mp::log(n) / ell;
  return x - mp::floor(x);
}

// ---------------------------------------------------------------------------
// periodic tables

HPReal PeriodicTable::value(const HPReal& phase) const {
  const int N = static_cast<int>(values.size());
  if (N == 0) throw DomainError("empty periodic table");
  HPReal t = phase - mp::floor(phase);
  HPReal x = t * N;
  HPReal fl = mp::floor(x);
  int i = fl.convert_to<int>();
  const HPReal u = x - fl;
  auto v = [&](int j) -> const HPReal& { return values[((j % N) + N) % N]; };
  // cubic Lagrange through i-1, i, i+1, i+2
  const HPReal w0 = -u * (u - 1) * (u - 2) / 6;
  const HPReal w1 = (u + 1) * (u - 1) * (u - 2) / 2;
  const HPReal w2 = -(u + 1) * u * (u - 2) / 2;
  const HPReal w3 = (u + 1) * u * (u - 1) / 6;
  return w0 * v(i - 1) + w1 * v(i) + w2 * v(i + 1) + w3 * v(i + 2);
}

HPReal psi0_from_saddle(const HPReal& ell, const HPReal& n, const HPReal& alpha) {
  const HPReal w = alpha * n * ell;
  return ell * (mp::log(w) + w - mp::log(n) + mp::log(ell));
}

namespace {

struct Sample {
  HPReal psi0;
  HPReal psi1;
  HPReal closed_form;
};

Sample sample_at(const SaddleModel& model, const HPReal& depth) {
  const HPReal n = mp::exp(depth * model.ell);
  const HPReal alpha = solve_alpha(model, n);
  Sample s;
  s.psi0 = psi0_from_saddle(model.ell, n, alpha);
  s.psi1 = model.line->value(alpha);
  s.closed_form = model.ell * model.ell * h0(model, alpha) + 2 * model.ell * mp::log(model.ell);
  return s;
}

struct TablePair {
  std::shared_ptr<PeriodicTable> psi0;
  std::shared_ptr<PeriodicTable> psi1;
};

TablePair table_at_depth(const SaddleModel& model, int m, int samples) {
  TablePair p{std::make_shared<PeriodicTable>(), std::make_shared<PeriodicTable>()};
  p.psi0->values.resize(samples);
  p.psi1->values.resize(samples);
  HPReal resid = 0;
  for (int i = 0; i < samples; ++i) {
    Sample s = sample_at(model, HPReal(m) + HPReal(i) / samples);
    p.psi0->values[i] = s.psi0;
    p.psi1->values[i] = s.psi1;
    resid = hp_max(resid, mp::abs(s.psi0 - s.closed_form));
  }
  Sample end = sample_at(model, HPReal(m + 1));
  p.psi0->endpoint_mismatch = mp::abs(end.psi0 - p.psi0->values[0]);
  p.psi1->endpoint_mismatch = mp::abs(end.psi1 - p.psi1->values[0]);
  p.psi0->closed_form_residual = resid;
  for (auto* t : {p.psi0.get(), p.psi1.get()}) {
    t->ell = model.ell;
    t->generation_m = m;
    auto [mn, mx] = std::minmax_element(t->values.begin(), t->values.end());
    t->amplitude = *mx - *mn;
  }
  p.psi0->name = "psi0:" + model.label;
  p.psi1->name = "psi1:" + model.label;
  return p;
}

HPReal sup_diff(const PeriodicTable& a, const PeriodicTable& b) {
  HPReal d = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    d = hp_max(d, mp::abs(a.values[i] - b.values[i]));
  }
  return d;
}

TablePair build_pair(const SaddleModel& model, const PsiBuildOptions& opt) {
  if (opt.samples < 256) throw DomainError("periodic tables need at least 256 samples");
  const HPReal tolerance(opt.tolerance);
  TablePair prev = table_at_depth(model, opt.m_start, opt.samples);
  for (int m = opt.m_start + 1; m <= opt.m_cap; ++m) {
    TablePair cur = table_at_depth(model, m, opt.samples);
    const HPReal d0 = sup_diff(*prev.psi0, *cur.psi0);
    const HPReal d1 = sup_diff(*prev.psi1, *cur.psi1);
    cur.psi0->last_change = d0;
    cur.psi1->last_change = d1;
    if (d0 < tolerance && d1 < tolerance) {
      cur.psi0->stabilized = cur.psi1->stabilized = true;
      return cur;
    }
    prev = std::move(cur);
  }
  std::ostringstream os;
  os << "psi tables for " << model.label << " still moving by "
     << to_string(hp_max(prev.psi0->last_change, prev.psi1->last_change), 4) << " at m = "
     << opt.m_cap;
  if (opt.strict) throw NoConvergence(os.str());
  diag::warn(os.str());
  return prev;
}

}  // namespace

std::shared_ptr<const PeriodicTable> build_psi(const SaddleModel& model, int which,
                                               const PsiBuildOptions& opt) {
  if (which != 0 && which != 1) throw DomainError("build_psi: which must be 0 or 1");
  static std::mutex mu;
  static std::map<std::string, TablePair> cache;
  std::ostringstream key;
  key << model.label << '|' << carried_digits() << '|' << opt.samples << '|' << opt.m_start
      << '|' << opt.m_cap << '|' << opt.tolerance << '|' << opt.strict;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key.str());
  if (it == cache.end()) it = cache.emplace(key.str(), build_pair(model, opt)).first;
  return which == 0 ? it->second.psi0 : it->second.psi1;
}

PsiBuildOptions relaxed_psi_options() {
  PsiBuildOptions opt;
  opt.strict = false;
  opt.m_cap = opt.m_start + 6;
  return opt;
}

const PeriodicTable& build_psi0() { return *build_psi(fibonacci_model(), 0); }
const PeriodicTable& build_psi1() { return *build_psi(fibonacci_model(), 1); }

HPReal alpha_estimate(const HPReal& n, const PeriodicTable& psi0) {
  if (!(n >= 100)) throw DomainError("alpha_estimate needs n >= 100");
  const HPReal ell = psi0.ell;
  const HPReal y = mp::exp(psi0.at_n(n) / ell) * n / ell;
  return lambert_w(y) / (n * ell);
}

HPReal log_alpha_sq_expansion(const HPReal& n, const HPReal& psi0_value, const HPReal& ell) {
  if (!(n >= 100)) throw DomainError("log_alpha_sq_expansion needs n >= 100");
  const HPReal X = mp::log(n);
  const HPReal Y = mp::log(X);
  const HPReal ll = mp::log(ell);
  const HPReal kappa = psi0_value / ell - ll;
  return X * (X - 2 * Y + 2 * ll) + Y * Y - 2 * Y * ll + 2 * Y + ll * ll - 2 * kappa;
}

HPReal log_alpha_sq_expansion(const HPReal& n, const PeriodicTable& psi0) {
  return log_alpha_sq_expansion(n, psi0.at_n(n), psi0.ell);
}

}  // namespace recurpart
