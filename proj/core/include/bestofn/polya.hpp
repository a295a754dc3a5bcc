#pragma once

#include "bestofn/game.hpp"
#include "bestofn/quadrature.hpp"
#include "bestofn/rational.hpp"
#include "bestofn/rng.hpp"

namespace bestofn {

/// Limiting probability that Player 1 is the net winner under
/// Polya(N1, N2):
///   Gamma(N1+N2)/(Gamma(N1)Gamma(N2)) * int_0^1 (1-x)^{N2-1}/(2-x)^{N1+N2} dx.
/// The prefactor is computed as an exact factorial ratio.
QuadratureResult polya_win_probability(int n1, int n2, double tol = 1e-12);

/// Density of the limiting scaled profit zeta = lim Z_n / n on [-1, 1].
double zeta_density(int n1, int n2, double x);

struct PolyaProfit {
  double closed_form = 0.0;       // (1/(n-1)) ((2n)!/((n-1)!^2 2^{2n-1}) - n)
  double asymptotic = 0.0;        // 2 sqrt(n/pi) - 1
  double quadrature_form = 0.0;   // (2n)!/(n-1)!^2 * int_0^1 x(1-x)^{n-1}/(2-x)^{2n} dx
  bool has_exact = false;
  Rational closed_exact;          // set when the factorials fit the exact path
};

/// Asymptotic expected profit of the winning player when N1 = N2 = n.
/// Evaluates the closed form (exactly for moderate n, via log-gamma
/// otherwise) and cross-checks it against the integral representation.
PolyaProfit polya_symmetric_expected_profit(int n, double tol = 1e-10,
                                            int exact_cap = 4096);

/// Gamma(shape, rate) for integer shape as a sum of exponentials.
template <class Rng>
double sample_gamma_integer(int shape, double rate, Rng& rng) {
  double sum = 0.0;
  for (int i = 0; i < shape; ++i) sum += rng.exponential(rate);
  return sum;
}

/// Beta(N1, N2) via the two-Gamma ratio.
template <class Rng>
double sample_beta_integer(int n1, int n2, Rng& rng) {
  const double x = sample_gamma_integer(n1, 1.0, rng);
  const double y = sample_gamma_integer(n2, 1.0, rng);
  return x / (x + y);
}

/// De Finetti sampler for the Polya game: draw xi ~ Beta(N1, N2) once,
/// then play i.i.d. Bernoulli(xi) rounds. Distributionally identical to
/// playing the urn round by round.
template <class Rng>
GameOutcome beta_mixture_sample(int n1, int n2, int target_n, Rng& rng) {
  const double xi = sample_beta_integer(n1, n2, rng);
  const std::uint64_t thresh = Rng::bernoulli_threshold(xi);
  int a = 0, b = 0;
  while (a < target_n && b < target_n) {
    if (rng.next() < thresh) ++a; else ++b;
  }
  return a == target_n ? make_outcome(target_n, Player::One, b)
                       : make_outcome(target_n, Player::Two, a);
}

}  // namespace bestofn
