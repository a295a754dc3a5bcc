#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bestofn/game.hpp"
#include "bestofn/polya.hpp"
#include "bestofn/rng.hpp"
#include "json.hpp"

namespace bestofn {

enum class SamplerKind { Sequential, PoissonRace, BetaMixture };

std::string sampler_name(SamplerKind s);
SamplerKind parse_sampler(const std::string& name);

struct SimulationPlan {
  Regime regime;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint32_t partitions = 1;
  SamplerKind sampler = SamplerKind::Sequential;

  /// Throws std::invalid_argument on sampler/regime mismatch
  /// (poisson_race needs Constant, beta_mixture needs Polya).
  void validate() const;
};

/// Counts of (winner, opponent wins) plus moments recomputed from the
/// merged integer counts, so the summary is independent of partitioning.
struct SimulationSummary {
  int n = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> p1_counts;  // Player 1 won, opponent at k
  std::vector<std::uint64_t> p2_counts;
  double e_z = 0.0;
  double e_tau = 0.0;
  double e_abs_z = 0.0;

  void record(const GameOutcome& o);
  void merge(const SimulationSummary& other);
  void recompute_moments();
};

/// Runs the plan. Partition i draws its fixed share of samples from the
/// stream Xoshiro256pp::for_partition(seed, i); partial summaries are
/// merged in partition order, so the result is bit-identical for any
/// worker count. max_threads = 0 means hardware concurrency.
SimulationSummary run(const SimulationPlan& plan, unsigned max_threads = 0);

/// Rubin-style Poisson race: two independent Poisson processes (rate 1
/// for Player 1, rate lambda = q/p for Player 2) raced to n events; only
/// the two next-arrival times are kept. The embedded jump chain has the
/// game's round transition probabilities, so the outcome law equals the
/// sequential sampler's.
template <class Rng>
GameOutcome poisson_race_sample(int n, double p, Rng& rng) {
  const double lambda = (1.0 - p) / p;
  double next_x = rng.exponential(1.0);
  double next_y = rng.exponential(lambda);
  int x = 0, y = 0;
  while (x < n && y < n) {
    if (next_x < next_y) {
      ++x;
      next_x += rng.exponential(1.0);
    } else {
      ++y;
      next_y += rng.exponential(lambda);
    }
  }
  return x == n ? make_outcome(n, Player::One, y)
                : make_outcome(n, Player::Two, x);
}

/// Y(tau_X) sampled directly: failures before the n-th success in
/// Bernoulli(p) trials, i.e. NegBin(n, p) on {0, 1, ...}. Unbounded
/// support; the gap to the true W-law is bounded by (4pq)^n.
template <class Rng>
std::uint64_t negbin_direct_sample(int n, double p, Rng& rng) {
  const std::uint64_t thresh = Rng::bernoulli_threshold(p);
  std::uint64_t failures = 0;
  int successes = 0;
  while (successes < n) {
    if (rng.next() < thresh) ++successes; else ++failures;
  }
  return failures;
}

nlohmann::json to_json(const SimulationPlan& plan);
nlohmann::json to_json(const SimulationSummary& summary);

}  // namespace bestofn
