#pragma once

#include <map>
#include <vector>

#include "bestofn/exact.hpp"
#include "bestofn/montecarlo.hpp"

namespace bestofn {

/// Discrete law over integer support; here the support is the net profit
/// Z = +-(n-k), which encodes (winner, opponent wins) uniquely.
using DiscreteLaw = std::map<int, double>;

DiscreteLaw z_law(const MarginDistributionF& dist);
DiscreteLaw z_law(const MarginDistribution& dist);
DiscreteLaw z_law(const SimulationSummary& summary);

/// (1/2) sum |a_i - b_i| over the union of supports.
double tv_distance(const DiscreteLaw& a, const DiscreteLaw& b);

/// (p z - mu n) / sqrt(n q): centers and scales the net profit so that the
/// fixed-p law converges to a standard normal as n grows.
double standardize_z(double z, int n, double p);
std::vector<double> standardize_z(const std::vector<double>& z, int n, double p);

double normal_cdf(double x);

/// Sup distance between the empirical CDF of the samples and Phi.
/// Sorts a copy; throws std::invalid_argument on empty input.
double ks_statistic(std::vector<double> samples);

/// Same statistic computed from a weighted discrete law of already
/// standardized atoms (value -> probability); equivalent to expanding the
/// law into samples.
double ks_statistic_weighted(const std::map<double, double>& law);

struct HalfProfitReport {
  double e_abs_z = 0.0;
  double ratio = 0.0;      // E|Z| / (2 sqrt(n/pi)); -> 1 as n grows
  double bound = 0.0;      // (sqrt(8n+1)-1)/2
  bool bound_ok = false;   // E|Z| <= bound
};

/// Fair-game (p = 1/2) profit check against the asymptotic 2 sqrt(n/pi)
/// and the optional-stopping upper bound.
HalfProfitReport half_profit_check(int n, double e_abs_z);

}  // namespace bestofn
