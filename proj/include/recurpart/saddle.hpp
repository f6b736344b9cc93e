/**
 * @file saddle.hpp
 * @brief Saddle point of n = -d/ds log G(e^{-s}) and the periodic tables psi_0, psi_1.
 *
 * For a model log G = L^2/(2l) - a L + K + P(s) - n_shift s (L = log s, P periodic),
 *   n(s) = -log s / (s l) + h0(s) / s + n_shift,   h0(s) = a - s P'(s).
 */
#pragma once

#include "recurpart/genlog.hpp"
#include "recurpart/hp.hpp"
#include "recurpart/seqkit.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace recurpart {

struct SaddleModel {
  std::string label;
  HPReal ell;
  HPReal a;
  HPReal n_shift;
  const PeriodicLine* line = nullptr;
  /// log G(e^{-s}) including the -n_shift s term.
  std::function<HPReal(const HPReal&)> log_gen;
};

/// Parts F_2, F_3, ...: a = b0 - 1, n_shift = 1, P = h_k0.
const SaddleModel& fibonacci_model();
SaddleModel recurrence_model(const RecurrenceSpec& spec);

HPReal h0(const SaddleModel& model, const HPReal& s);
HPReal h0(const HPReal& s);

HPReal n_of_alpha(const SaddleModel& model, const HPReal& alpha);
HPReal n_of_alpha(const HPReal& alpha);

/// Root of n_of_alpha(alpha) = n in [0.5, 2] * log n / (n l).
HPReal solve_alpha(const SaddleModel& model, const HPReal& n);
HPReal solve_alpha(const HPReal& n);

/// dn/ds at s = alpha, all terms.
HPReal dn_ds_at(const SaddleModel& model, const HPReal& alpha);
HPReal dn_ds_at(const HPReal& alpha);
/// log(alpha) / (alpha^2 l)
HPReal dn_ds_leading(const HPReal& alpha);

/// frac(log n / ell)
HPReal phase_of(const HPReal& n, const HPReal& ell);

struct PeriodicTable {
  std::string name;
  HPReal ell;
  /// values[i] at phase i / values.size()
  std::vector<HPReal> values;
  int generation_m = 0;
  bool stabilized = false;
  /// sup-norm change from the previous depth
  HPReal last_change;
  /// |psi(depth m, phase 0) - psi(depth m, phase 1)|
  HPReal endpoint_mismatch;
  HPReal amplitude;
  /// For psi_0: sup |table - (l^2 h0 + 2 l log l)| over the samples.
  HPReal closed_form_residual;

  /// Periodic cubic interpolation at frac(phase).
  HPReal value(const HPReal& phase) const;
  HPReal at_n(const HPReal& n) const { return value(phase_of(n, ell)); }
};

struct PsiBuildOptions {
  int samples = 256;
  int m_start = 40;
  int m_cap = 200;
  double tolerance = 1e-8;
  /// Throw NoConvergence when the table has not settled by m_cap.
  bool strict = true;
};

/// Options for recurrences whose periodic part is too large for the depth test to settle:
/// a few depth steps, then the last table with stabilized = false.
PsiBuildOptions relaxed_psi_options();

/// psi_0 (which = 0) or psi_1 (which = 1) for a model; cached per model and options.
std::shared_ptr<const PeriodicTable> build_psi(const SaddleModel& model, int which,
                                               const PsiBuildOptions& opt = {});
const PeriodicTable& build_psi0();
const PeriodicTable& build_psi1();

/// psi_0 from one saddle: l [log(w e^w) - log n + log l], w = alpha n l.
HPReal psi0_from_saddle(const HPReal& ell, const HPReal& n, const HPReal& alpha);

/// W(e^{psi0/l} n / l) / (n l), psi0 read at phase(n).
HPReal alpha_estimate(const HPReal& n, const PeriodicTable& psi0);

/// Three-term expansion of (log alpha)^2 with remainder O((log log n)^2 / log n).
HPReal log_alpha_sq_expansion(const HPReal& n, const HPReal& psi0_value, const HPReal& ell);
HPReal log_alpha_sq_expansion(const HPReal& n, const PeriodicTable& psi0);

}  // namespace recurpart
