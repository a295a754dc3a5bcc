#include "bestofn/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace bestofn {

namespace {

// Numerator of P(Player 1 wins the round) at state (a, b); the shared
// denominator for diagonal d = a + b is diagonal_denominator(regime, d).
std::int64_t win_numerator(const Regime& regime, int a) {
  switch (regime.kind) {
    case RegimeKind::Constant:
      return 0;  // handled separately: numerator is a big integer
    case RegimeKind::Polya:
      return regime.n1 + a;
    case RegimeKind::AntiOkCorral:
      return regime.target_n - a;
  }
  return 0;
}

BigInt diagonal_denominator(const Regime& regime, int d) {
  switch (regime.kind) {
    case RegimeKind::Constant:
      return regime.p.get_den();
    case RegimeKind::Polya:
      return BigInt(regime.n1 + regime.n2 + d);
    case RegimeKind::AntiOkCorral:
      return BigInt(2 * regime.target_n - d);
  }
  return BigInt(1);
}

}  // namespace

MarginDistribution exact_distribution(const Regime& regime, int exact_cap) {
  regime.validate();
  const int n = regime.target_n;
  if (n > exact_cap)
    throw CapacityError("exact mode capped at n <= " + std::to_string(exact_cap) +
                        " (requested n = " + std::to_string(n) +
                        "); use float mode for large n");

  MarginDistribution out;
  out.n = n;
  out.p1_margin.assign(n, Rational(0));
  out.p2_margin.assign(n, Rational(0));

  const bool constant = regime.kind == RegimeKind::Constant;
  const BigInt const_w1 = constant ? BigInt(regime.p.get_num()) : BigInt(0);

  // cur[a - lo] = numerator of the reach probability of state (a, d - a),
  // over the running denominator `den` (product of diagonal denominators).
  std::vector<BigInt> cur{BigInt(1)}, next;
  BigInt den = 1;
  BigInt t;  // scratch

  for (int d = 0; d <= 2 * n - 2; ++d) {
    const int lo = std::max(0, d - (n - 1));
    const int hi = std::min(d, n - 1);
    const int lo2 = std::max(0, d + 1 - (n - 1));
    const int hi2 = std::min(d + 1, n - 1);
    const BigInt step_den = diagonal_denominator(regime, d);
    next.assign(static_cast<std::size_t>(hi2 - lo2 + 1), BigInt(0));
    const BigInt margin_den = den * step_den;

    for (int a = lo; a <= hi; ++a) {
      const BigInt& reach = cur[static_cast<std::size_t>(a - lo)];
      if (reach == 0) continue;
      const int b = d - a;
      const BigInt w1 = constant ? const_w1 : BigInt(win_numerator(regime, a));
      const BigInt w2 = step_den - w1;
      t = reach * w1;
      if (a + 1 == n) {
        Rational q(t, margin_den);
        q.canonicalize();
        out.p1_margin[static_cast<std::size_t>(b)] = q;
      } else {
        next[static_cast<std::size_t>(a + 1 - lo2)] += t;
      }
      t = reach * w2;
      if (b + 1 == n) {
        Rational q(t, margin_den);
        q.canonicalize();
        out.p2_margin[static_cast<std::size_t>(a)] = q;
      } else {
        next[static_cast<std::size_t>(a - lo2)] += t;
      }
    }
    den = margin_den;
    cur.swap(next);
  }
  return out;
}

MarginDistributionF exact_distribution_float(const Regime& regime) {
  regime.validate();
  const int n = regime.target_n;
  MarginDistributionF out;
  out.n = n;
  out.p1_margin.assign(n, 0.0);
  out.p2_margin.assign(n, 0.0);

  const double const_p =
      regime.kind == RegimeKind::Constant ? to_double(regime.p) : 0.0;

  std::vector<double> cur{1.0}, next;
  for (int d = 0; d <= 2 * n - 2; ++d) {
    const int lo = std::max(0, d - (n - 1));
    const int hi = std::min(d, n - 1);
    const int lo2 = std::max(0, d + 1 - (n - 1));
    const int hi2 = std::min(d + 1, n - 1);
    const double inv_den =
        regime.kind == RegimeKind::Constant
            ? 0.0
            : 1.0 / to_double(diagonal_denominator(regime, d));
    next.assign(static_cast<std::size_t>(hi2 - lo2 + 1), 0.0);

    for (int a = lo; a <= hi; ++a) {
      const double reach = cur[static_cast<std::size_t>(a - lo)];
      if (reach == 0.0) continue;
      const int b = d - a;
      const double th = regime.kind == RegimeKind::Constant
                            ? const_p
                            : win_numerator(regime, a) * inv_den;
      const double up = reach * th;
      const double down = reach - up;
      if (a + 1 == n) out.p1_margin[static_cast<std::size_t>(b)] = up;
      else next[static_cast<std::size_t>(a + 1 - lo2)] += up;
      if (b + 1 == n) out.p2_margin[static_cast<std::size_t>(a)] = down;
      else next[static_cast<std::size_t>(a - lo2)] += down;
    }
    cur.swap(next);
  }
  return out;
}

Moments<Rational> expected_values(const MarginDistribution& dist) {
  Moments<Rational> m;
  m.e_z = 0; m.e_abs_z = 0; m.e_tau = 0;
  for (int k = 0; k < dist.n; ++k) {
    const Rational& a = dist.p1_margin[static_cast<std::size_t>(k)];
    const Rational& b = dist.p2_margin[static_cast<std::size_t>(k)];
    m.e_z += (dist.n - k) * (a - b);
    m.e_abs_z += (dist.n - k) * (a + b);
    m.e_tau += (dist.n + k) * (a + b);
  }
  return m;
}

namespace {

// Kahan-compensated accumulator.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double s = sum + y;
    c = (s - sum) - y;
    sum = s;
  }
};

}  // namespace

Moments<double> expected_values(const MarginDistributionF& dist) {
  Kahan e_z, e_abs_z, e_tau;
  for (int k = 0; k < dist.n; ++k) {
    const double a = dist.p1_margin[static_cast<std::size_t>(k)];
    const double b = dist.p2_margin[static_cast<std::size_t>(k)];
    e_z.add((dist.n - k) * (a - b));
    e_abs_z.add((dist.n - k) * (a + b));
    e_tau.add((dist.n + k) * (a + b));
  }
  return {e_z.sum, e_abs_z.sum, e_tau.sum};
}

Rational total_probability(const MarginDistribution& dist) {
  Rational s = 0;
  for (const auto& q : dist.p1_margin) s += q;
  for (const auto& q : dist.p2_margin) s += q;
  return s;
}

double total_probability(const MarginDistributionF& dist) {
  Kahan s;
  for (double v : dist.p1_margin) s.add(v);
  for (double v : dist.p2_margin) s.add(v);
  return s.sum;
}

Rational sample_path_probability(const Regime& regime,
                                 const std::vector<bool>& player1_won) {
  regime.validate();
  const int n = regime.target_n;
  GameState s;
  Rational prob = 1;
  for (std::size_t i = 0; i < player1_won.size(); ++i) {
    if (s.a == n || s.b == n)
      throw std::logic_error("sequence continues past the end of the game");
    const Rational th = round_win_probability(regime, s);
    prob *= player1_won[i] ? th : Rational(1) - th;
    if (player1_won[i]) ++s.a; else ++s.b;
  }
  if (s.a != n && s.b != n)
    throw std::logic_error("sequence ends before the game is decided");
  return prob;
}

namespace {

template <class Dist, class Entry>
nlohmann::json dist_json(const Dist& dist, const char* mode, Entry&& entry) {
  nlohmann::json j;
  j["n"] = dist.n;
  j["mode"] = mode;
  auto arr = [&](const auto& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(entry(x));
    return a;
  };
  j["p1_margin"] = arr(dist.p1_margin);
  j["p2_margin"] = arr(dist.p2_margin);
  return j;
}

}  // namespace

nlohmann::json to_json(const MarginDistribution& dist) {
  return dist_json(dist, "exact-rational",
                   [](const Rational& q) { return to_fraction_string(q); });
}

nlohmann::json to_json(const MarginDistributionF& dist) {
  return dist_json(dist, "float", [](double x) { return x; });
}

}  // namespace bestofn
