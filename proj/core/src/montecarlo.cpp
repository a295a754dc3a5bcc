#include "bestofn/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace bestofn {

std::string sampler_name(SamplerKind s) {
  switch (s) {
    case SamplerKind::Sequential:  return "sequential";
    case SamplerKind::PoissonRace: return "poisson_race";
    case SamplerKind::BetaMixture: return "beta_mixture";
  }
  return "?";
}

SamplerKind parse_sampler(const std::string& name) {
  if (name == "sequential") return SamplerKind::Sequential;
  if (name == "poisson_race") return SamplerKind::PoissonRace;
  if (name == "beta_mixture") return SamplerKind::BetaMixture;
  throw std::invalid_argument("unknown sampler: " + name);
}

void SimulationPlan::validate() const {
  regime.validate();
  if (partitions < 1) throw std::invalid_argument("partitions must be >= 1");
  if (sampler == SamplerKind::PoissonRace &&
      regime.kind != RegimeKind::Constant)
    throw std::invalid_argument("poisson_race requires the constant regime");
  if (sampler == SamplerKind::BetaMixture && regime.kind != RegimeKind::Polya)
    throw std::invalid_argument("beta_mixture requires the polya regime");
}

void SimulationSummary::record(const GameOutcome& o) {
  auto& counts = o.winner == Player::One ? p1_counts : p2_counts;
  ++counts[static_cast<std::size_t>(o.opponent_wins)];
  ++total;
}

void SimulationSummary::merge(const SimulationSummary& other) {
  for (std::size_t k = 0; k < p1_counts.size(); ++k) {
    p1_counts[k] += other.p1_counts[k];
    p2_counts[k] += other.p2_counts[k];
  }
  total += other.total;
}

void SimulationSummary::recompute_moments() {
  e_z = e_tau = e_abs_z = 0.0;
  if (total == 0) return;
  double sz = 0.0, st = 0.0, sa = 0.0;
  for (int k = 0; k < n; ++k) {
    const auto c1 = static_cast<double>(p1_counts[static_cast<std::size_t>(k)]);
    const auto c2 = static_cast<double>(p2_counts[static_cast<std::size_t>(k)]);
    sz += (n - k) * (c1 - c2);
    sa += (n - k) * (c1 + c2);
    st += (n + k) * (c1 + c2);
  }
  const double inv = 1.0 / static_cast<double>(total);
  e_z = sz * inv;
  e_abs_z = sa * inv;
  e_tau = st * inv;
}

namespace {

SimulationSummary run_partition(const SimulationPlan& plan,
                                std::uint64_t partition,
                                std::uint64_t count) {
  const int n = plan.regime.target_n;
  SimulationSummary s;
  s.n = n;
  s.p1_counts.assign(static_cast<std::size_t>(n), 0);
  s.p2_counts.assign(static_cast<std::size_t>(n), 0);
  Xoshiro256pp rng = Xoshiro256pp::for_partition(plan.seed, partition);
  switch (plan.sampler) {
    case SamplerKind::Sequential:
      for (std::uint64_t i = 0; i < count; ++i)
        s.record(play_match(plan.regime, rng));
      break;
    case SamplerKind::PoissonRace:
      for (std::uint64_t i = 0; i < count; ++i)
        s.record(poisson_race_sample(n, to_double(plan.regime.p), rng));
      break;
    case SamplerKind::BetaMixture:
      for (std::uint64_t i = 0; i < count; ++i)
        s.record(beta_mixture_sample(plan.regime.n1, plan.regime.n2, n, rng));
      break;
  }
  return s;
}

}  // namespace

SimulationSummary run(const SimulationPlan& plan, unsigned max_threads) {
  plan.validate();
  const int n = plan.regime.target_n;
  SimulationSummary merged;
  merged.n = n;
  merged.p1_counts.assign(static_cast<std::size_t>(n), 0);
  merged.p2_counts.assign(static_cast<std::size_t>(n), 0);

  const std::uint64_t parts = plan.partitions;
  const std::uint64_t base = plan.samples / parts;
  const std::uint64_t extra = plan.samples % parts;
  auto share = [&](std::uint64_t i) { return base + (i < extra ? 1 : 0); };

  unsigned workers = max_threads ? max_threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, parts));

  if (workers <= 1) {
    for (std::uint64_t i = 0; i < parts; ++i)
      merged.merge(run_partition(plan, i, share(i)));
  } else {
    std::vector<SimulationSummary> partials(parts);
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t i = next.fetch_add(1); i < parts;
             i = next.fetch_add(1))
          partials[i] = run_partition(plan, i, share(i));
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& p : partials) merged.merge(p);  // fixed order
  }
  merged.recompute_moments();
  return merged;
}

nlohmann::json to_json(const SimulationPlan& plan) {
  nlohmann::json j;
  j["regime"] = plan.regime.kind_name();
  j["n"] = plan.regime.target_n;
  if (plan.regime.kind == RegimeKind::Constant)
    j["p"] = to_fraction_string(plan.regime.p);
  if (plan.regime.kind == RegimeKind::Polya) {
    j["n1"] = plan.regime.n1;
    j["n2"] = plan.regime.n2;
  }
  j["samples"] = plan.samples;
  j["seed"] = plan.seed;
  j["partitions"] = plan.partitions;
  j["sampler"] = sampler_name(plan.sampler);
  j["rng_algorithm"] = kRngAlgorithm;
  return j;
}

nlohmann::json to_json(const SimulationSummary& summary) {
  nlohmann::json j;
  j["n"] = summary.n;
  j["total"] = summary.total;
  j["p1_counts"] = summary.p1_counts;
  j["p2_counts"] = summary.p2_counts;
  j["empirical_E_Z"] = summary.e_z;
  j["empirical_E_tau"] = summary.e_tau;
  j["empirical_E_absZ"] = summary.e_abs_z;
  return j;
}

}  // namespace bestofn
