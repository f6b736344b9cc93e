#include "recurpart/cli.hpp"

#include "recurpart/asymp.hpp"
#include "recurpart/bigcount.hpp"
#include "recurpart/errors.hpp"
#include "recurpart/genlog.hpp"
#include "recurpart/report.hpp"
#include "recurpart/saddle.hpp"
#include "recurpart/special.hpp"
#include "recurpart/verify.hpp"
#include "recurpart/zetarec.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>

namespace recurpart {

namespace mp = boost::multiprecision;

RecurrenceSpec load_recurrence_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
    return make_recurrence(j.at("coeffs").get<std::vector<long long>>(),
                           j.at("initial").get<std::vector<long long>>(),
                           j.value("label", std::string("P")));
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

int default_digits_from_env() {
  if (const char* env = std::getenv("RECURPART_DIGITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("RECURPART_DIGITS is not an integer: ") + env);
    }
  }
  return kDefaultDigits;
}

std::string cli_number(const HPReal& x) {
  const int d = working_digits();
  if (x == 0) return "0";
  const HPReal ax = mp::abs(x);
  if (ax < HPReal("1e-4") || ax >= HPReal("1e15")) return to_string(x, d);
  const int int_digits = mp::floor(mp::log10(ax)).convert_to<int>() + 1;
  return x.str(std::max(d - int_digits, 0), std::ios_base::fixed);
}

namespace {

struct Options {
  int digits = 0;
  std::string recurrence;
  std::string out;
  std::string n = "0";
  long long nmax = 0;
  std::string route = "both";
  bool oracle = false;
  bool decades = false;
  std::string re = "2";
  std::string im = "0";
  std::string s = "0.01";
  int which = 0;
  bool quick = false;
  bool full = false;
};

std::optional<RecurrenceSpec> recurrence_of(const Options& o) {
  if (o.recurrence.empty()) return std::nullopt;
  return load_recurrence_json(o.recurrence);
}

std::string count_label(const std::optional<RecurrenceSpec>& spec) {
  return spec ? "p_" + spec->label : std::string("p_F");
}

void write_report(Report& r, const Options& o, std::ostream& out) {
  stamp_metadata(r);
  if (o.out.empty()) {
    out << to_csv(r);
  } else {
    emit_csv(r, o.out);
  }
}

long long parse_n(const std::string& text) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--n must be an integer, got " + text);
  }
}

int cmd_count(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  const long long n = parse_n(o.n);
  if (n < 0) throw NegativeArgument("--n must be >= 0");
  const CountTable t = spec ? count_table(*spec, n) : count_table(make_fibonacci(), n);
  out << count_label(spec) << "(" << n << ") = " << t.counts[n] << "\n";
  if (o.oracle) {
    const BigInt b = brute_force_count(t.parts, n);
    out << "oracle: " << b << (b == t.counts[n] ? " (match)" : " (MISMATCH)") << "\n";
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  const CountTable t = spec ? count_table(*spec, o.nmax) : count_table(make_fibonacci(), o.nmax);
  Report r = make_report({"n", "count"});
  for (long long n = 0; n <= o.nmax; ++n) r.add_row({std::to_string(n), format_full(t.counts[n])});
  write_report(r, o, out);
  return kExitOk;
}

AsymptoticEstimate estimate_for(const std::optional<RecurrenceSpec>& spec, long long n) {
  return spec ? theorem12_estimate(*spec, BigInt(n)) : theorem11_estimate(BigInt(n));
}

HPReal routed_value(const AsymptoticEstimate& e, const std::string& route) {
  return route == "ck" ? e.components.at("ck_route") : e.log_value;
}

int cmd_estimate(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  const long long n = parse_n(o.n);
  const AsymptoticEstimate e = estimate_for(spec, n);
  if (o.route == "theorem" || o.route == "both") {
    out << "log_value = " << cli_number(e.log_value) << "\n";
    out << "log_A = " << cli_number(mp::log(e.A)) << "\n";
    out << "B = " << cli_number(e.B) << "\n";
    out << "C = " << cli_number(e.C) << "\n";
  }
  if (o.route == "ck" || o.route == "both") {
    out << "ck_route = " << cli_number(e.components.at("ck_route")) << "\n";
  }
  if (o.route == "both") {
    for (const auto& [k, v] : e.components) {
      if (k != "ck_route") out << k << " = " << cli_number(v) << "\n";
    }
  }
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  if (o.nmax < 100) throw TooSmall("--nmax must be >= 100");
  const RecurrenceSpec s = spec ? *spec : make_fibonacci();
  const CountTable t = count_table(s, o.nmax);
  Report r = make_report({"n", "log_exact", "log_estimate", "leading", "abs_err", "normalized_err"});
  const std::string route = o.route == "both" ? "theorem" : o.route;
  for (long long n = 100; n <= o.nmax; n *= 10) {
    const HPReal N(n);
    const HPReal exact = log_count(t.counts[n]);
    const HPReal est = routed_value(estimate_for(spec, n), route);
    const HPReal err = mp::abs(exact - est);
    const HPReal X = mp::log(N);
    const HPReal Y = mp::log(X);
    r.add_row({std::to_string(n), format_full(exact), format_full(est),
               format_full(leading_log(N, s.log_beta())), format_full(err),
               format_full(err * X / (Y * Y))});
  }
  write_report(r, o, out);
  return kExitOk;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  const HPComplex z(hp_from_string(o.re), hp_from_string(o.im));
  const HPComplex v = spec ? zeta_rec_continued(*spec, z) : zeta_fib_continued(z);
  out << "re = " << cli_number(v.re) << "\n";
  out << "im = " << cli_number(v.im) << "\n";
  return kExitOk;
}

int cmd_loggen(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  const HPReal s = hp_from_string(o.s);
  const HPReal ex = spec ? log_gen_P(*spec, s) : log_gen_F2(s);
  const HPReal di = spec ? log_gen_direct(*spec, s) : log_gen_direct(s);
  out << "expansion = " << cli_number(ex) << "\n";
  out << "direct = " << cli_number(di) << "\n";
  out << "difference = " << cli_number(ex - di) << "\n";
  return kExitOk;
}

int cmd_saddle(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  const HPReal N(parse_n(o.n));
  const SaddleModel model = spec ? recurrence_model(*spec) : fibonacci_model();
  const PsiBuildOptions popt = spec ? relaxed_psi_options() : PsiBuildOptions{};
  const auto psi0 = build_psi(model, 0, popt);
  const HPReal a = solve_alpha(model, N);
  const HPReal est = alpha_estimate(N, *psi0);
  out << "solve_alpha = " << cli_number(a) << "\n";
  out << "alpha_estimate = " << cli_number(est) << "\n";
  out << "relative_gap = " << cli_number(mp::abs(est - a) / a) << "\n";
  return kExitOk;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const auto spec = recurrence_of(o);
  const SaddleModel model = spec ? recurrence_model(*spec) : fibonacci_model();
  const PsiBuildOptions popt = spec ? relaxed_psi_options() : PsiBuildOptions{};
  const auto t = build_psi(model, o.which, popt);
  Report r = make_report({"phase", "value"});
  const int N = static_cast<int>(t->values.size());
  for (int i = 0; i < N; ++i) {
    r.add_row({format_full(HPReal(i) / N), format_full(t->values[i])});
  }
  r.metadata["generation_m"] = std::to_string(t->generation_m);
  r.metadata["stabilized"] = t->stabilized ? "true" : "false";
  r.metadata["endpoint_mismatch"] = to_string(t->endpoint_mismatch, 6);
  r.metadata["amplitude"] = to_string(t->amplitude, 6);
  write_report(r, o, out);
  return kExitOk;
}

int cmd_constants(const Options&, std::ostream& out) {
  out << "gamma = " << cli_number(euler_gamma()) << "\n";
  out << "gamma1 = " << cli_number(stieltjes_gamma1()) << "\n";
  out << "log_phi = " << cli_number(log_phi()) << "\n";
  out << "c1 = " << cli_number(fib_c1()) << "\n";
  out << "c2 = " << cli_number(c2()) << "\n";
  out << "c3 = " << cli_number(c3()) << "\n";
  out << "residue_log_coeff = " << cli_number(-c3_exact() / log_phi()) << "\n";
  out << "residue_constant = " << cli_number(c2_exact()) << "\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  AcceptanceOptions opt;
  opt.full = o.full && !o.quick;
  opt.digits = working_digits();
  return run_acceptance(opt, out) == 0 ? kExitOk : 1;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partitions into terms of linear recurrences: exact counts and asymptotics",
               "recurpart"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--digits", o.digits, "working precision D (>= 32)");

  auto recurrence = [&](CLI::App* sc) {
    sc->add_option("--recurrence", o.recurrence, "JSON recurrence {label, coeffs, initial}");
  };
  auto* count = app.add_subcommand("count", "exact p(n)");
  count->add_option("--n", o.n)->required();
  count->add_flag("--oracle", o.oracle, "cross-check by enumeration (n <= 10^4)");
  recurrence(count);
  auto* table = app.add_subcommand("table", "CSV of p(0..nmax)");
  table->add_option("--nmax", o.nmax)->required();
  table->add_option("--out", o.out);
  recurrence(table);
  auto* estimate = app.add_subcommand("estimate", "asymptotic estimate of log p(n)");
  estimate->add_option("--n", o.n)->required();
  estimate->add_option("--route", o.route)->check(CLI::IsMember({"theorem", "ck", "both"}));
  recurrence(estimate);
  auto* compare = app.add_subcommand("compare", "exact vs estimate on decades");
  compare->add_option("--nmax", o.nmax)->required();
  compare->add_flag("--decades", o.decades, "decade grid (the only grid)");
  compare->add_option("--route", o.route)->check(CLI::IsMember({"theorem", "ck", "both"}));
  compare->add_option("--out", o.out);
  recurrence(compare);
  auto* zeta = app.add_subcommand("zeta", "continued zeta of the sequence");
  zeta->add_option("--re", o.re);
  zeta->add_option("--im", o.im);
  recurrence(zeta);
  auto* loggen = app.add_subcommand("loggen", "log of the generating function at e^{-s}");
  loggen->add_option("--s", o.s);
  recurrence(loggen);
  auto* saddle = app.add_subcommand("saddle", "saddle point for n");
  saddle->add_option("--n", o.n)->required();
  recurrence(saddle);
  auto* psi = app.add_subcommand("psi", "periodic table as CSV");
  psi->add_option("--which", o.which)->check(CLI::IsMember({0, 1}));
  psi->add_option("--out", o.out);
  recurrence(psi);
  app.add_subcommand("constants", "constants of the expansion");
  auto* verify = app.add_subcommand("verify", "acceptance suite");
  verify->add_flag("--quick", o.quick);
  verify->add_flag("--full", o.full);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    set_working_digits(o.digits > 0 ? o.digits : default_digits_from_env());
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "count") return cmd_count(o, out);
    if (name == "table") return cmd_table(o, out);
    if (name == "estimate") return cmd_estimate(o, out);
    if (name == "compare") return cmd_compare(o, out);
    if (name == "zeta") return cmd_zeta(o, out);
    if (name == "loggen") return cmd_loggen(o, out);
    if (name == "saddle") return cmd_saddle(o, out);
    if (name == "psi") return cmd_psi(o, out);
    if (name == "constants") return cmd_constants(o, out);
    if (name == "verify") return cmd_verify(o, out);
    throw UsageError("unknown command " + name);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericFailure& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace recurpart
