// Command-line front end: exact margin distributions, closed forms,
// Monte Carlo simulation, verification suites and CSV plot data.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bestofn/exact.hpp"
#include "bestofn/formulas.hpp"
#include "bestofn/montecarlo.hpp"
#include "bestofn/polya.hpp"
#include "bestofn/stats.hpp"
#include "bestofn/verify.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace bestofn;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json envelope(const std::string& command, json parameters, json results,
              std::optional<std::uint64_t> seed = std::nullopt) {
  json j;
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  j["results"] = std::move(results);
  json prov;
  prov["version"] = kVersion;
  prov["rng_algorithm"] = kRngAlgorithm;
  prov["timestamp"] = timestamp_utc();
  if (seed) prov["seed"] = *seed;
  j["provenance"] = prov;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
  }
}

unsigned thread_cap() {
  if (const char* env = std::getenv("BESTOFN_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;  // machine parallelism
}

struct RegimeFlags {
  std::string regime = "constant";
  int n = 1;
  std::string p = "1/2";
  int n1 = 1;
  int n2 = 1;

  void attach(CLI::App* cmd) {
    cmd->add_option("--regime", regime, "constant | polya | antiok")
        ->check(CLI::IsMember({"constant", "polya", "antiok"}));
    cmd->add_option("--n", n, "wins needed (target n)")->required();
    cmd->add_option("--p", p,
                    "round win probability, \"num/den\" (exact) or decimal "
                    "(float mode)");
    cmd->add_option("--n1", n1, "initial type-1 balls (polya)");
    cmd->add_option("--n2", n2, "initial type-2 balls (polya)");
  }

  Regime build() const {
    if (regime == "constant") return Regime::constant(n, parse_rational(p));
    if (regime == "polya") return Regime::polya(n, n1, n2);
    return Regime::anti_ok_corral(n);
  }

  json params() const {
    json j;
    j["regime"] = regime;
    j["n"] = n;
    if (regime == "constant") j["p"] = p;
    if (regime == "polya") { j["n1"] = n1; j["n2"] = n2; }
    return j;
  }
};

json bound_reports_json(const std::vector<BoundReport>& reports) {
  json arr = json::array();
  for (const auto& b : reports) {
    json j;
    j["bound_name"] = b.name;
    j["bound_value"] = b.bound;
    j["observed_value"] = b.observed;
    j["satisfied"] = b.satisfied;
    arr.push_back(j);
  }
  return arr;
}

int cmd_exact(const RegimeFlags& flags, const std::string& mode,
              const std::string& format, int exact_cap,
              const std::string& out_path) {
  const Regime regime = flags.build();
  const bool use_float =
      mode == "float" ||
      (mode == "auto" && regime.kind == RegimeKind::Constant &&
       looks_like_decimal(flags.p));

  json results;
  std::string csv;
  if (use_float) {
    const auto dist = exact_distribution_float(regime);
    const auto m = expected_values(dist);
    results = to_json(dist);
    results["E_Z"] = m.e_z;
    results["E_absZ"] = m.e_abs_z;
    results["E_tau"] = m.e_tau;
    results["total_probability"] = total_probability(dist);
    if (regime.kind == RegimeKind::Constant)
      results["bounds"] = bound_reports_json(martingale_bounds(
          regime.target_n, to_double(regime.p), m.e_tau, m.e_z, m.e_abs_z));
    if (format == "csv") {
      csv = "k,p1_margin,p2_margin\n";
      for (int k = 0; k < dist.n; ++k)
        csv += std::to_string(k) + "," +
               std::to_string(dist.p1_margin[static_cast<std::size_t>(k)]) +
               "," +
               std::to_string(dist.p2_margin[static_cast<std::size_t>(k)]) +
               "\n";
    }
  } else {
    const auto dist = exact_distribution(regime, exact_cap);
    const auto m = expected_values(dist);
    results = to_json(dist);
    results["E_Z"] = to_fraction_string(m.e_z);
    results["E_absZ"] = to_fraction_string(m.e_abs_z);
    results["E_tau"] = to_fraction_string(m.e_tau);
    results["total_probability"] = to_fraction_string(total_probability(dist));
    if (regime.kind == RegimeKind::Constant)
      results["bounds"] = bound_reports_json(martingale_bounds(
          regime.target_n, to_double(regime.p), to_double(m.e_tau),
          to_double(m.e_z), to_double(m.e_abs_z)));
    if (format == "csv") {
      csv = "k,p1_margin,p2_margin\n";
      for (int k = 0; k < dist.n; ++k)
        csv += std::to_string(k) + "," +
               to_fraction_string(dist.p1_margin[static_cast<std::size_t>(k)]) +
               "," +
               to_fraction_string(dist.p2_margin[static_cast<std::size_t>(k)]) +
               "\n";
    }
  }

  if (format == "csv") emit_text(csv, out_path);
  else {
    json params = flags.params();
    params["mode"] = use_float ? "float" : "exact";
    emit(envelope("exact", params, results), out_path);
  }
  return 0;
}

int cmd_simulate(const RegimeFlags& flags, std::uint64_t samples,
                 std::uint64_t seed, std::uint32_t partitions,
                 const std::string& sampler, bool compare_exact,
                 const std::string& out_path) {
  SimulationPlan plan;
  plan.regime = flags.build();
  plan.samples = samples;
  plan.seed = seed;
  plan.partitions = partitions;
  plan.sampler = parse_sampler(sampler);
  const auto summary = run(plan, thread_cap());

  json results = to_json(summary);
  if (compare_exact) {
    const auto dist = exact_distribution_float(plan.regime);
    results["tv_distance_to_exact"] = tv_distance(z_law(summary), z_law(dist));
  }
  json params = flags.params();
  params["samples"] = samples;
  params["partitions"] = partitions;
  params["sampler"] = sampler;
  params["plan"] = to_json(plan);
  emit(envelope("simulate", params, results, seed), out_path);
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t samples,
               std::uint64_t seed, const std::string& out_path) {
  const auto checks = run_suite(suite, samples, seed, thread_cap());
  json params;
  params["suite"] = suite;
  params["samples"] = samples;
  json results;
  results["checks"] = report_json(checks);
  results["all_pass"] = all_pass(checks);
  emit(envelope("verify", params, results, seed), out_path);
  if (!all_pass(checks)) {
    for (const auto& c : checks)
      if (!c.pass) std::cerr << "FAILED: " << c.name << "\n";
    return kExitVerificationFailure;
  }
  return 0;
}

int cmd_plotdata_path(const RegimeFlags& flags, std::uint64_t seed,
                      const std::string& out_path) {
  const Regime regime = flags.build();
  const int n = regime.target_n;
  Xoshiro256pp rng = Xoshiro256pp::for_partition(seed, 0);
  std::string csv = "k,X_k,line\n";
  GameState s;
  csv += "0,0," + std::to_string(2 * n) + "\n";
  while (s.a < n && s.b < n) {
    const bool won = rng.bernoulli(round_win_probability_f(regime, s));
    if (won) ++s.a; else ++s.b;
    csv += std::to_string(s.round()) + "," + std::to_string(s.win_diff()) +
           "," + std::to_string(2 * n - s.round()) + "\n";
  }
  emit_text(csv, out_path);
  return 0;
}

int cmd_plotdata_zeta(int n1, int n2, int points, const std::string& out_path) {
  if (points < 2) throw std::invalid_argument("need at least 2 points");
  std::string csv = "x,f_zeta\n";
  char buf[64];
  for (int i = 0; i < points; ++i) {
    const double x = -1.0 + 2.0 * i / (points - 1);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", x, zeta_density(n1, n2, x));
    csv += buf;
  }
  emit_text(csv, out_path);
  return 0;
}

int cmd_plotdata_margin(const RegimeFlags& flags, const std::string& out_path) {
  const auto dist = exact_distribution_float(flags.build());
  std::string csv = "k,p1_margin,p2_margin\n";
  char buf[96];
  for (int k = 0; k < dist.n; ++k) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", k,
                  dist.p1_margin[static_cast<std::size_t>(k)],
                  dist.p2_margin[static_cast<std::size_t>(k)]);
    csv += buf;
  }
  emit_text(csv, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"best-of-(2n-1) game distributions: exact DP, closed forms, "
               "Monte Carlo and verification"};
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to a file instead of stdout");

  // exact
  auto* exact = app.add_subcommand("exact", "exact margin distribution");
  RegimeFlags exact_flags;
  exact_flags.attach(exact);
  std::string mode = "auto", format = "json";
  int exact_cap = kDefaultExactCap;
  exact->add_option("--mode", mode, "exact | float")
      ->check(CLI::IsMember({"auto", "exact", "float"}));
  exact->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  exact->add_option("--exact-cap", exact_cap, "exact-mode capacity cap");

  // formula
  auto* formula = app.add_subcommand("formula", "closed-form evaluators");
  formula->require_subcommand(1);
  int f_n = 2, f_k = 1, f_n1 = 1, f_n2 = 1, f_max = 30;
  std::string f_p = "1/2";
  double f_tol = 1e-12;
  bool f_check = false;
  auto* catalan_mean = formula->add_subcommand("catalan-mean", "E[Z] via the Catalan sum");
  catalan_mean->add_option("--n", f_n)->required();
  catalan_mean->add_option("--p", f_p)->required();
  catalan_mean->add_flag("--check", f_check, "cross-check against the DP");
  auto* negbin = formula->add_subcommand("negbin-pmf", "negative binomial main term");
  negbin->add_option("--n", f_n)->required();
  negbin->add_option("--p", f_p)->required();
  negbin->add_option("--k", f_k, "margin (omit for all k < n)");
  auto* antiok_exact_cmd = formula->add_subcommand("antiok-exact", "anti-OK exact win probability");
  antiok_exact_cmd->add_option("--n", f_n)->required();
  antiok_exact_cmd->add_option("--k", f_k)->required();
  auto* antiok_limit_cmd = formula->add_subcommand("antiok-limit", "anti-OK limiting pmf");
  antiok_limit_cmd->add_option("--k", f_k)->required();
  auto* polya_winprob = formula->add_subcommand("polya-winprob", "Polya limiting win probability");
  polya_winprob->add_option("--n1", f_n1)->required();
  polya_winprob->add_option("--n2", f_n2)->required();
  polya_winprob->add_option("--tol", f_tol);
  auto* polya_profit = formula->add_subcommand("polya-profit", "Polya symmetric expected profit");
  polya_profit->add_option("--n", f_n)->required();
  polya_profit->add_option("--tol", f_tol);
  auto* bounds_cmd = formula->add_subcommand("bounds", "martingale bounds vs DP");
  bounds_cmd->add_option("--n", f_n)->required();
  bounds_cmd->add_option("--p", f_p)->required();
  auto* identities_cmd = formula->add_subcommand("identities", "combinatorial identity sweep");
  identities_cmd->add_option("--max", f_max, "sweep bound");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo simulation");
  RegimeFlags sim_flags;
  sim_flags.attach(simulate);
  std::uint64_t samples = 100000, seed = 0;
  std::uint32_t partitions = 1;
  std::string sampler = "sequential";
  bool compare_exact = false;
  simulate->add_option("--samples", samples)->required();
  simulate->add_option("--seed", seed);
  simulate->add_option("--partitions", partitions);
  simulate->add_option("--sampler", sampler,
                       "sequential | poisson_race | beta_mixture");
  simulate->add_flag("--compare-exact", compare_exact,
                     "add TV distance against the exact DP");

  // verify
  auto* verify = app.add_subcommand("verify", "verification suites");
  std::string suite = "all";
  std::uint64_t v_samples = 1000000, v_seed = 20260826;
  verify->add_option("--suite", suite,
                     "identities | bounds | oracle | clt | polya | antiok | all")
      ->check(CLI::IsMember(
          {"identities", "bounds", "oracle", "clt", "polya", "antiok", "all"}));
  verify->add_option("--samples", v_samples, "Monte Carlo sample count");
  verify->add_option("--seed", v_seed);

  // plotdata
  auto* plotdata = app.add_subcommand("plotdata", "CSV plot data");
  plotdata->require_subcommand(1);
  auto* path_cmd = plotdata->add_subcommand("path", "one simulated trajectory");
  RegimeFlags path_flags;
  path_flags.attach(path_cmd);
  std::uint64_t path_seed = 0;
  path_cmd->add_option("--seed", path_seed);
  auto* zeta_cmd = plotdata->add_subcommand("zeta-density", "limiting profit density grid");
  int z_n1 = 1, z_n2 = 1, z_points = 201;
  zeta_cmd->add_option("--n1", z_n1)->required();
  zeta_cmd->add_option("--n2", z_n2)->required();
  zeta_cmd->add_option("--points", z_points);
  auto* margin_cmd = plotdata->add_subcommand("margin-pmf", "margin pmf table");
  RegimeFlags margin_flags;
  margin_flags.attach(margin_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (exact->parsed())
      return cmd_exact(exact_flags, mode, format, exact_cap, out_path);

    if (formula->parsed()) {
      json params, results;
      if (catalan_mean->parsed()) {
        const Rational p = parse_rational(f_p);
        const Rational value = expected_profit_catalan(f_n, p);
        params = {{"n", f_n}, {"p", f_p}};
        results["E_Z"] = to_fraction_string(value);
        if (f_check) {
          const auto dp =
              expected_values(exact_distribution(Regime::constant(f_n, p)));
          results["dp_E_Z"] = to_fraction_string(dp.e_z);
          results["check_pass"] = value == dp.e_z;
        }
      } else if (negbin->parsed()) {
        const double p = to_double(parse_rational(f_p));
        params = {{"n", f_n}, {"p", f_p}};
        if (negbin->count("--k")) {
          params["k"] = f_k;
          results["pmf"] = negbin_approx_pmf(f_n, f_k, p);
        } else {
          json arr = json::array();
          for (int k = 0; k < f_n; ++k)
            arr.push_back(negbin_approx_pmf(f_n, k, p));
          results["pmf"] = arr;
        }
        results["error_bound"] = approx_error_bound(f_n, p);
      } else if (antiok_exact_cmd->parsed()) {
        params = {{"n", f_n}, {"k", f_k}};
        if (f_n <= 2000)
          results["probability"] =
              to_fraction_string(antiok_exact_prob(f_n, f_k));
        results["probability_float"] = antiok_exact_prob_f(f_n, f_k);
        results["limit"] = antiok_limit_pmf(f_k);
      } else if (antiok_limit_cmd->parsed()) {
        params = {{"k", f_k}};
        results["probability"] = antiok_limit_pmf(f_k);
      } else if (polya_winprob->parsed()) {
        params = {{"n1", f_n1}, {"n2", f_n2}, {"tol", f_tol}};
        const auto r = polya_win_probability(f_n1, f_n2, f_tol);
        results["win_probability"] = r.value;
        results["error_estimate"] = r.error_estimate;
        results["panels"] = r.panels;
      } else if (polya_profit->parsed()) {
        params = {{"n", f_n}, {"tol", f_tol}};
        const auto r = polya_symmetric_expected_profit(f_n, f_tol);
        results["closed_form"] = r.closed_form;
        if (r.has_exact)
          results["closed_form_exact"] = to_fraction_string(r.closed_exact);
        results["asymptotic"] = r.asymptotic;
        results["quadrature_form"] = r.quadrature_form;
      } else if (bounds_cmd->parsed()) {
        const Rational p = parse_rational(f_p);
        params = {{"n", f_n}, {"p", f_p}};
        const auto m =
            expected_values(exact_distribution_float(Regime::constant(f_n, p)));
        results["bounds"] = bound_reports_json(martingale_bounds(
            f_n, to_double(p), m.e_tau, m.e_z, m.e_abs_z));
      } else if (identities_cmd->parsed()) {
        params = {{"max", f_max}};
        int failures = 0, cases = 0;
        for (int b = 0; b <= f_max; ++b)
          for (int m = 0; m + b <= f_max; ++m)
            for (int a = b + m; a <= f_max; ++a) {
              ++cases;
              if (!verify_identity_ident(a, b, m)) ++failures;
            }
        for (int n = 1; n <= f_max; ++n)
          for (int j = 0; j < n; ++j) {
            ++cases;
            if (!verify_identity_lemmain(n, j)) ++failures;
          }
        results["cases"] = cases;
        results["failures"] = failures;
        results["all_pass"] = failures == 0;
        if (failures > 0) {
          emit(envelope("formula", params, results), out_path);
          return kExitVerificationFailure;
        }
      }
      emit(envelope("formula", params, results), out_path);
      return 0;
    }

    if (simulate->parsed())
      return cmd_simulate(sim_flags, samples, seed, partitions, sampler,
                          compare_exact, out_path);
    if (verify->parsed())
      return cmd_verify(suite, v_samples, v_seed, out_path);
    if (plotdata->parsed()) {
      if (path_cmd->parsed())
        return cmd_plotdata_path(path_flags, path_seed, out_path);
      if (zeta_cmd->parsed())
        return cmd_plotdata_zeta(z_n1, z_n2, z_points, out_path);
      return cmd_plotdata_margin(margin_flags, out_path);
    }
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature failure: " << e.what()
              << " (achieved " << e.achieved().value << " +/- "
              << e.achieved().error_estimate << ")\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  }
  return 0;
}
