#include "bestofn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bestofn {

DiscreteLaw z_law(const MarginDistributionF& dist) {
  DiscreteLaw law;
  for (int k = 0; k < dist.n; ++k) {
    law[dist.n - k] += dist.p1_margin[static_cast<std::size_t>(k)];
    law[-(dist.n - k)] += dist.p2_margin[static_cast<std::size_t>(k)];
  }
  return law;
}

DiscreteLaw z_law(const MarginDistribution& dist) {
  DiscreteLaw law;
  for (int k = 0; k < dist.n; ++k) {
    law[dist.n - k] += to_double(dist.p1_margin[static_cast<std::size_t>(k)]);
    law[-(dist.n - k)] += to_double(dist.p2_margin[static_cast<std::size_t>(k)]);
  }
  return law;
}

DiscreteLaw z_law(const SimulationSummary& summary) {
  DiscreteLaw law;
  if (summary.total == 0) return law;
  const double inv = 1.0 / static_cast<double>(summary.total);
  for (int k = 0; k < summary.n; ++k) {
    const auto c1 = summary.p1_counts[static_cast<std::size_t>(k)];
    const auto c2 = summary.p2_counts[static_cast<std::size_t>(k)];
    if (c1) law[summary.n - k] += static_cast<double>(c1) * inv;
    if (c2) law[-(summary.n - k)] += static_cast<double>(c2) * inv;
  }
  return law;
}

double tv_distance(const DiscreteLaw& a, const DiscreteLaw& b) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      sum += std::fabs(ia->second);
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      sum += std::fabs(ib->second);
      ++ib;
    } else {
      sum += std::fabs(ia->second - ib->second);
      ++ia;
      ++ib;
    }
  }
  return 0.5 * sum;
}

double standardize_z(double z, int n, double p) {
  const double q = 1.0 - p;
  const double mu = p - q;
  return (p * z - mu * n) / std::sqrt(n * q);
}

std::vector<double> standardize_z(const std::vector<double>& z, int n,
                                  double p) {
  std::vector<double> out;
  out.reserve(z.size());
  for (double v : z) out.push_back(standardize_z(v, n, p));
  return out;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

double ks_statistic(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: empty input");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double phi = normal_cdf(samples[i]);
    sup = std::max(sup, std::fabs(static_cast<double>(i) / n - phi));
    sup = std::max(sup, std::fabs(static_cast<double>(i + 1) / n - phi));
  }
  return sup;
}

double ks_statistic_weighted(const std::map<double, double>& law) {
  if (law.empty()) throw std::invalid_argument("ks_statistic: empty law");
  double sup = 0.0;
  double cdf = 0.0;
  for (const auto& [value, prob] : law) {
    const double phi = normal_cdf(value);
    sup = std::max(sup, std::fabs(cdf - phi));          // left limit
    cdf += prob;
    sup = std::max(sup, std::fabs(cdf - phi));          // right limit
  }
  return sup;
}

HalfProfitReport half_profit_check(int n, double e_abs_z) {
  HalfProfitReport r;
  r.e_abs_z = e_abs_z;
  r.ratio = e_abs_z / (2.0 * std::sqrt(n / M_PI));
  r.bound = (std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0;
  r.bound_ok = e_abs_z <= r.bound;
  return r;
}

}  // namespace bestofn
