#include "bestofn/verify.hpp"

#include <cmath>
#include <map>

#include "bestofn/formulas.hpp"
#include "bestofn/montecarlo.hpp"
#include "bestofn/polya.hpp"
#include "bestofn/stats.hpp"

namespace bestofn {

CheckResult make_check(std::string name, double observed, double threshold,
                       std::string relation) {
  CheckResult c;
  c.name = std::move(name);
  c.observed = observed;
  c.threshold = threshold;
  c.relation = std::move(relation);
  if (c.relation == "<=") c.pass = observed <= threshold;
  else if (c.relation == ">=") c.pass = observed >= threshold;
  else if (c.relation == "==") c.pass = observed == threshold;
  else throw std::invalid_argument("unknown relation: " + c.relation);
  return c;
}

MarginDistribution enumerate_distribution(const Regime& regime) {
  regime.validate();
  const int n = regime.target_n;
  MarginDistribution out;
  out.n = n;
  out.p1_margin.assign(static_cast<std::size_t>(n), Rational(0));
  out.p2_margin.assign(static_cast<std::size_t>(n), Rational(0));

  std::vector<bool> seq;
  auto rec = [&](auto&& self, int a, int b) -> void {
    if (a == n || b == n) {
      const Rational prob = sample_path_probability(regime, seq);
      if (a == n) out.p1_margin[static_cast<std::size_t>(b)] += prob;
      else out.p2_margin[static_cast<std::size_t>(a)] += prob;
      return;
    }
    seq.push_back(true);
    self(self, a + 1, b);
    seq.back() = false;
    self(self, a, b + 1);
    seq.pop_back();
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<CheckResult> verify_identities() {
  std::vector<CheckResult> out;

  int ident_fail = 0, ident_count = 0;
  for (int b = 0; b <= 30; ++b)
    for (int m = 0; m <= 30; ++m)
      for (int a = b + m; a <= 30; ++a) {
        ++ident_count;
        if (!verify_identity_ident(a, b, m)) ++ident_fail;
      }
  out.push_back(make_check("alternating binomial identity, a,b,m <= 30 (" +
                               std::to_string(ident_count) + " cases)",
                           ident_fail, 0, "=="));

  int lemmain_fail = 0;
  for (int n = 1; n <= 40; ++n)
    for (int j = 0; j < n; ++j)
      if (!verify_identity_lemmain(n, j)) ++lemmain_fail;
  out.push_back(make_check("lemma identity, n <= 40, j < n", lemmain_fail, 0,
                           "=="));

  int am_fail = 0;
  for (const char* ps : {"3/5", "7/10"}) {
    const Rational p = parse_rational(ps);
    for (int m = 1; m <= 40; ++m)
      if (!verify_a_m_expansion(m, p)) ++am_fail;
  }
  out.push_back(make_check("A_m expansion, m <= 40, p in {3/5, 7/10}",
                           am_fail, 0, "=="));
  return out;
}

std::vector<CheckResult> verify_bounds(std::uint64_t mc_samples,
                                       std::uint64_t seed) {
  std::vector<CheckResult> out;

  // Optional-stopping bounds against the DP moments. The |E[Z]| bound is
  // asymptotically tight (and identically zero at p = 1/2), so the
  // comparison is done in exact rational arithmetic.
  int violations = 0;
  for (const char* ps : {"1/2", "3/5", "7/10", "4/5", "9/10"}) {
    const Rational p = parse_rational(ps);
    const Rational mu = 2 * p - 1;
    const Rational max_pq = p >= Rational(1, 2) ? p : 1 - p;
    for (int n = 1; n <= 200; ++n) {
      const auto m =
          expected_values(exact_distribution(Regime::constant(n, p)));
      if (m.e_tau > Rational(2 * n) / (1 + abs(mu))) ++violations;
      if (abs(m.e_z) > n * abs(mu) / max_pq) ++violations;
      if (p == Rational(1, 2)) {
        // E|Z| <= (sqrt(8n+1)-1)/2  <=>  (2 E|Z| + 1)^2 <= 8n+1, and the
        // matching lower bound on the match length.
        const Rational lhs = 2 * m.e_abs_z + 1;
        if (lhs * lhs > 8 * n + 1) ++violations;
        if (m.e_tau < 2 * n - m.e_abs_z) ++violations;
      }
    }
  }
  out.push_back(make_check(
      "martingale bounds on DP, n <= 200, p in {0.5..0.9}", violations, 0,
      "=="));

  // Chernoff bound on the gamma race, Monte Carlo.
  struct RacePoint { int n; double lambda; };
  for (const auto& [n, lambda] : {RacePoint{5, 0.5}, RacePoint{20, 2.0 / 3}}) {
    Xoshiro256pp rng = Xoshiro256pp::for_partition(seed, 101);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < mc_samples; ++i) {
      const double tx = sample_gamma_integer(n, 1.0, rng);
      const double ty = sample_gamma_integer(n, lambda, rng);
      if (tx >= ty) ++hits;
    }
    const double emp = static_cast<double>(hits) / static_cast<double>(mc_samples);
    out.push_back(make_check(
        "gamma race P(tau_X >= tau_Y), n=" + std::to_string(n), emp,
        gamma_race_bound(n, lambda)));
  }

  // Sub-exponential tail of NegBin(100, 1/2), Monte Carlo.
  {
    Xoshiro256pp rng = Xoshiro256pp::for_partition(seed, 102);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < mc_samples; ++i) {
      const auto eta = negbin_direct_sample(100, 0.5, rng);
      const double dev = std::fabs(static_cast<double>(eta) - 100.0);
      if (dev >= 40.0) ++hits;
    }
    const double emp = static_cast<double>(hits) / static_cast<double>(mc_samples);
    out.push_back(make_check("negbin tail P(|eta-100| >= 40)", emp,
                             negbin_tail_bound(100, 40)));
  }
  return out;
}

namespace {

double max_entrywise_rational_mismatch(const MarginDistribution& a,
                                       const MarginDistribution& b) {
  int mismatches = 0;
  for (int k = 0; k < a.n; ++k) {
    if (a.p1_margin[static_cast<std::size_t>(k)] !=
        b.p1_margin[static_cast<std::size_t>(k)]) ++mismatches;
    if (a.p2_margin[static_cast<std::size_t>(k)] !=
        b.p2_margin[static_cast<std::size_t>(k)]) ++mismatches;
  }
  return mismatches;
}

SimulationSummary run_sampler(const Regime& regime, SamplerKind sampler,
                              std::uint64_t samples, std::uint64_t seed) {
  SimulationPlan plan;
  plan.regime = regime;
  plan.samples = samples;
  plan.seed = seed;
  plan.partitions = 4;
  plan.sampler = sampler;
  return run(plan);
}

}  // namespace

std::vector<CheckResult> verify_oracle(std::uint64_t mc_samples,
                                       std::uint64_t seed) {
  std::vector<CheckResult> out;

  // Path-enumeration oracle equals the DP, exactly, for all regimes.
  {
    int mismatches = 0;
    for (int n = 1; n <= 6; ++n) {
      std::vector<Regime> regimes = {
          Regime::constant(n, parse_rational("3/5")),
          Regime::polya(n, 1, 1), Regime::polya(n, 2, 3),
          Regime::anti_ok_corral(n)};
      for (const auto& regime : regimes)
        mismatches += static_cast<int>(max_entrywise_rational_mismatch(
            exact_distribution(regime), enumerate_distribution(regime)));
    }
    out.push_back(make_check("path enumeration == DP, n <= 6, all regimes",
                             mismatches, 0, "=="));
  }

  // Catalan-series mean equals the DP mean, exact rational equality.
  {
    int mismatches = 0;
    for (const char* ps : {"1/2", "3/5", "7/10", "9/10"}) {
      const Rational p = parse_rational(ps);
      for (int n = 1; n <= 200; ++n) {
        const auto dist = exact_distribution(Regime::constant(n, p));
        if (expected_profit_catalan(n, p) != expected_values(dist).e_z)
          ++mismatches;
      }
    }
    out.push_back(make_check(
        "Catalan mean == DP E[Z], n <= 200, 4 rational p", mismatches, 0,
        "=="));
  }

  // Negative binomial approximation error bound on the losing-margin pmf.
  {
    double worst_excess = -1.0;
    for (int n : {5, 10, 20, 40, 64}) {
      for (double p : {0.55, 0.65, 0.75, 0.85, 0.95}) {
        const auto dist = exact_distribution_float(
            Regime::constant(n, parse_rational(std::to_string(p))));
        const double bound = approx_error_bound(n, p);
        double max_err = 0.0;
        for (int k = 0; k < n; ++k) {
          const double exact_w = dist.p1_margin[static_cast<std::size_t>(k)] +
                                 dist.p2_margin[static_cast<std::size_t>(k)];
          max_err = std::max(max_err,
                             std::fabs(exact_w - negbin_approx_pmf(n, k, p)));
        }
        worst_excess = std::max(worst_excess, max_err - bound);
      }
    }
    out.push_back(make_check(
        "negbin approx: max_k |P(W=k) - pmf| - (4pq)^n over grid",
        worst_excess, 1e-12));
  }

  // Sampler equivalence at n = 5: every admissible sampler within TV 0.005
  // of the exact DP; Poisson race vs sequential within 0.007.
  {
    const Regime constant5 = Regime::constant(5, parse_rational("3/5"));
    const Regime polya5 = Regime::polya(5, 1, 1);
    const Regime antiok5 = Regime::anti_ok_corral(5);

    const auto seq_const = run_sampler(constant5, SamplerKind::Sequential,
                                       mc_samples, seed + 1);
    const auto race_const = run_sampler(constant5, SamplerKind::PoissonRace,
                                        mc_samples, seed + 2);
    const auto seq_polya = run_sampler(polya5, SamplerKind::Sequential,
                                       mc_samples, seed + 3);
    const auto beta_polya = run_sampler(polya5, SamplerKind::BetaMixture,
                                        mc_samples, seed + 4);
    const auto seq_antiok = run_sampler(antiok5, SamplerKind::Sequential,
                                        mc_samples, seed + 5);

    const auto dp_const = z_law(exact_distribution_float(constant5));
    const auto dp_polya = z_law(exact_distribution_float(polya5));
    const auto dp_antiok = z_law(exact_distribution_float(antiok5));

    out.push_back(make_check("TV(sequential, DP), constant n=5",
                             tv_distance(z_law(seq_const), dp_const), 0.005));
    out.push_back(make_check("TV(poisson_race, DP), constant n=5",
                             tv_distance(z_law(race_const), dp_const), 0.005));
    out.push_back(make_check("TV(sequential, DP), polya(1,1) n=5",
                             tv_distance(z_law(seq_polya), dp_polya), 0.005));
    out.push_back(make_check("TV(beta_mixture, DP), polya(1,1) n=5",
                             tv_distance(z_law(beta_polya), dp_polya), 0.005));
    out.push_back(make_check("TV(sequential, DP), antiok n=5",
                             tv_distance(z_law(seq_antiok), dp_antiok), 0.005));
    out.push_back(make_check(
        "TV(poisson_race, sequential), constant n=5",
        tv_distance(z_law(race_const), z_law(seq_const)), 0.007));
  }

  // Determinism: identical plans are bit-identical regardless of worker
  // count, for 1, 2 and 8 partitions.
  {
    int mismatches = 0;
    for (std::uint32_t parts : {1u, 2u, 8u}) {
      SimulationPlan plan;
      plan.regime = Regime::constant(5, parse_rational("3/5"));
      plan.samples = 10000;
      plan.seed = seed;
      plan.partitions = parts;
      const auto payload1 = to_json(run(plan, 1)).dump();
      const auto payload2 = to_json(run(plan, 4)).dump();
      const auto payload3 = to_json(run(plan, 8)).dump();
      if (payload1 != payload2 || payload1 != payload3) ++mismatches;
    }
    out.push_back(make_check(
        "simulation payload bit-identical across worker counts", mismatches,
        0, "=="));
  }
  return out;
}

std::vector<CheckResult> verify_clt(std::uint64_t mc_samples,
                                    std::uint64_t seed,
                                    unsigned max_threads) {
  std::vector<CheckResult> out;

  // Normal limit at desk scale: standardized simulated Z vs Phi.
  {
    const int n = 10000;
    const double p = 0.6;
    SimulationPlan plan;
    plan.regime = Regime::constant(n, parse_rational("3/5"));
    plan.samples = mc_samples;
    plan.seed = seed;
    plan.partitions = 16;
    const auto summary = run(plan, max_threads);
    std::map<double, double> law;
    const double inv = 1.0 / static_cast<double>(summary.total);
    for (int k = 0; k < n; ++k) {
      const auto c1 = summary.p1_counts[static_cast<std::size_t>(k)];
      const auto c2 = summary.p2_counts[static_cast<std::size_t>(k)];
      if (c1) law[standardize_z(n - k, n, p)] += static_cast<double>(c1) * inv;
      if (c2) law[standardize_z(-(n - k), n, p)] += static_cast<double>(c2) * inv;
    }
    out.push_back(make_check("KS of standardized Z vs N(0,1), n=10^4, p=0.6",
                             ks_statistic_weighted(law), 0.02));
  }

  // Fair-game profit at n = 10^4 from the float DP.
  {
    const int n = 10000;
    const auto m = expected_values(
        exact_distribution_float(Regime::constant(n, parse_rational("1/2"))));
    const auto report = half_profit_check(n, m.e_abs_z);
    out.push_back(make_check("E|Z| / (2 sqrt(n/pi)), p=1/2, n=10^4 (lower)",
                             report.ratio, 0.98, ">="));
    out.push_back(make_check("E|Z| / (2 sqrt(n/pi)), p=1/2, n=10^4 (upper)",
                             report.ratio, 1.02));
    out.push_back(make_check("E|Z| <= (sqrt(8n+1)-1)/2, n=10^4",
                             report.e_abs_z, report.bound));
  }

  // Z/n concentrates at 1 - q/p (weak law restated): the DP-exact
  // probability of a 0.05-deviation decreases from n=200 to n=2000.
  {
    const double p = 0.6;
    const double target = 1.0 - (1.0 - p) / p;
    auto deviation_prob = [&](int n) {
      const auto law = z_law(exact_distribution_float(
          Regime::constant(n, parse_rational("3/5"))));
      double sum = 0.0;
      for (const auto& [z, prob] : law)
        if (std::fabs(static_cast<double>(z) / n - target) > 0.05) sum += prob;
      return sum;
    };
    const double p200 = deviation_prob(200);
    const double p2000 = deviation_prob(2000);
    out.push_back(make_check(
        "P(|Z/n - (1-q/p)| > 0.05) decreases, n=200 -> 2000", p2000, p200));
  }
  return out;
}

std::vector<CheckResult> verify_polya() {
  std::vector<CheckResult> out;

  for (int n : {1, 2, 5}) {
    const auto res = polya_win_probability(n, n, 1e-12);
    out.push_back(make_check(
        "polya win prob, N1=N2=" + std::to_string(n) + ", |value - 1/2|",
        std::fabs(res.value - 0.5), 1e-10));
  }
  out.push_back(make_check("polya win prob (2,1), |value - 3/4|",
                           std::fabs(polya_win_probability(2, 1, 1e-12).value -
                                     0.75),
                           1e-10));

  struct Pair { int n1, n2; };
  for (const auto& [n1, n2] : {Pair{1, 1}, Pair{2, 3}, Pair{5, 5}}) {
    const auto mass = integrate(
        [=](double x) { return zeta_density(n1, n2, x); }, -1.0, 1.0, 1e-12);
    out.push_back(make_check("zeta density mass, (N1,N2)=(" +
                                 std::to_string(n1) + "," +
                                 std::to_string(n2) + "), |int - 1|",
                             std::fabs(mass.value - 1.0), 1e-10));
  }

  for (const auto& [n1, n2] : {Pair{2, 1}, Pair{2, 3}}) {
    const double sum = polya_win_probability(n1, n2, 1e-13).value +
                       polya_win_probability(n2, n1, 1e-13).value;
    out.push_back(make_check("player-swap duality, (N1,N2)=(" +
                                 std::to_string(n1) + "," +
                                 std::to_string(n2) + "), |sum - 1|",
                             std::fabs(sum - 1.0), 2e-12));
  }

  // Winner's expected profit, N1 = N2 = n.
  {
    const auto profit5 = polya_symmetric_expected_profit(5, 1e-12);
    const Rational frozen("935/512");  // (10!/(4!^2 2^9) - 5)/4
    out.push_back(make_check("polya profit closed form at n=5, exact",
                             profit5.has_exact &&
                                     profit5.closed_exact == frozen
                                 ? 0
                                 : 1,
                             0, "=="));
    out.push_back(make_check(
        "polya profit quadrature identity at n=5",
        std::fabs(profit5.quadrature_form - profit5.closed_form), 1e-10));
    for (int n : {100, 400, 1600}) {
      const auto profit = polya_symmetric_expected_profit(n, 1e-10);
      out.push_back(make_check(
          "polya profit |closed - asymptotic| at n=" + std::to_string(n),
          std::fabs(profit.closed_form - profit.asymptotic),
          0.6 / std::sqrt(static_cast<double>(n))));
    }
  }

  // Finite-n convergence of the DP win probability to the integral.
  {
    const auto dist =
        exact_distribution_float(Regime::polya(2000, 2, 1));
    double win = 0.0;
    for (double v : dist.p1_margin) win += v;
    out.push_back(make_check("polya(2,1) DP win prob at n=2000, |p - 3/4|",
                             std::fabs(win - 0.75), 0.02));
  }
  return out;
}

std::vector<CheckResult> verify_antiok() {
  std::vector<CheckResult> out;

  // Exact formula equals the DP margins, rationally, for every n <= 200.
  {
    int mismatches = 0;
    for (int n = 1; n <= 200; ++n) {
      const auto dist = exact_distribution(Regime::anti_ok_corral(n));
      Rational sum = 0;
      for (int k = 1; k <= n; ++k) {
        const Rational formula = antiok_exact_prob(n, k);
        if (formula != dist.p1_margin[static_cast<std::size_t>(n - k)] ||
            formula != dist.p2_margin[static_cast<std::size_t>(n - k)])
          ++mismatches;
        sum += formula;
      }
      if (2 * sum != 1) ++mismatches;
    }
    out.push_back(make_check(
        "anti-OK formula == DP margins and doubled sum == 1, n <= 200",
        mismatches, 0, "=="));
  }

  // Geometric limit at n = 10^4.
  {
    double worst = 0.0;
    for (int k = 1; k <= 10; ++k)
      worst = std::max(worst, std::fabs(antiok_exact_prob_f(10000, k) -
                                        antiok_limit_pmf(k)));
    out.push_back(make_check(
        "anti-OK |exact - 2^-(k+1)|, n=10^4, k <= 10", worst, 1e-3));
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t mc_samples,
                                   std::uint64_t seed, unsigned max_threads) {
  if (suite == "identities") return verify_identities();
  if (suite == "bounds") return verify_bounds(mc_samples, seed);
  if (suite == "oracle") return verify_oracle(mc_samples, seed);
  if (suite == "clt") return verify_clt(mc_samples, seed, max_threads);
  if (suite == "polya") return verify_polya();
  if (suite == "antiok") return verify_antiok();
  if (suite == "all") {
    std::vector<CheckResult> out;
    for (const char* s :
         {"identities", "bounds", "oracle", "clt", "polya", "antiok"}) {
      auto part = run_suite(s, mc_samples, seed, max_threads);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

bool all_pass(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

nlohmann::json report_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j;
    j["check"] = c.name;
    j["observed"] = c.observed;
    j["relation"] = c.relation;
    j["threshold"] = c.threshold;
    j["pass"] = c.pass;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace bestofn
