#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bestofn/exact.hpp"
#include "json.hpp"

namespace bestofn {

/// One verification check: `observed <relation> threshold`.
struct CheckResult {
  std::string name;
  double observed = 0.0;
  double threshold = 0.0;
  std::string relation = "<=";
  bool pass = false;
};

CheckResult make_check(std::string name, double observed, double threshold,
                       std::string relation = "<=");

/// Brute-force oracle: sums sample_path_probability over every terminating
/// win/loss sequence. Exponential in n; intended for n <= 8.
MarginDistribution enumerate_distribution(const Regime& regime);

// Verification suites. Monte Carlo based checks take a fixed seed so runs
// are reproducible; thresholds are pinned to the documented tolerances.
std::vector<CheckResult> verify_identities();
std::vector<CheckResult> verify_bounds(std::uint64_t mc_samples = 1000000,
                                       std::uint64_t seed = 20260826);
std::vector<CheckResult> verify_oracle(std::uint64_t mc_samples = 1000000,
                                       std::uint64_t seed = 20260826);
std::vector<CheckResult> verify_clt(std::uint64_t mc_samples = 1000000,
                                    std::uint64_t seed = 20260826,
                                    unsigned max_threads = 0);
std::vector<CheckResult> verify_polya();
std::vector<CheckResult> verify_antiok();

/// Runs one of {identities, bounds, oracle, clt, polya, antiok, all}.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t mc_samples = 1000000,
                                   std::uint64_t seed = 20260826,
                                   unsigned max_threads = 0);

bool all_pass(const std::vector<CheckResult>& checks);
nlohmann::json report_json(const std::vector<CheckResult>& checks);

}  // namespace bestofn
