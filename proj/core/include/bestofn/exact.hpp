#pragma once

#include <stdexcept>
#include <vector>

#include "bestofn/game.hpp"
#include "bestofn/rational.hpp"
#include "json.hpp"

namespace bestofn {

/// Joint law of (winner, opponent wins): p1_margin[k] is the probability
/// that Player 1 wins overall while the opponent holds k wins. The laws of
/// W, Z and tau are all derived from these 2n numbers.
template <class S>
struct MarginDistributionT {
  int n = 0;
  std::vector<S> p1_margin;  // k = 0 .. n-1
  std::vector<S> p2_margin;
};

using MarginDistribution = MarginDistributionT<Rational>;
using MarginDistributionF = MarginDistributionT<double>;

template <class S>
struct Moments {
  S e_z{};
  S e_abs_z{};
  S e_tau{};
};

/// Thrown when an exact-mode request exceeds the configured cap; the
/// message suggests float mode.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultExactCap = 512;

/// Exact forward DP over (a, b) states. All three regimes have round
/// probabilities whose denominator depends only on the round index, so
/// reach probabilities within one anti-diagonal share a denominator and
/// the DP runs on big-integer numerators.
MarginDistribution exact_distribution(const Regime& regime,
                                      int exact_cap = kDefaultExactCap);

/// Same DP in double arithmetic; O(n) live memory per diagonal.
MarginDistributionF exact_distribution_float(const Regime& regime);

Moments<Rational> expected_values(const MarginDistribution& dist);
Moments<double> expected_values(const MarginDistributionF& dist);

/// Sum of all 2n margin entries; 1 exactly in rational mode, within 1e-12
/// in float mode (the float version accumulates with compensated summation).
Rational total_probability(const MarginDistribution& dist);
double total_probability(const MarginDistributionF& dist);

/// Probability of one fully specified match: element i of the sequence is
/// true when Player 1 won round i. The sequence must end the game exactly
/// at its last element; throws std::logic_error otherwise. Summing over
/// all valid sequences reproduces exact_distribution (tested at small n).
Rational sample_path_probability(const Regime& regime,
                                 const std::vector<bool>& player1_won);

nlohmann::json to_json(const MarginDistribution& dist);
nlohmann::json to_json(const MarginDistributionF& dist);

}  // namespace bestofn
