#include "bestofn/polya.hpp"

#include <cmath>

#include "bestofn/quadrature.hpp"
#include "doctest.h"

using namespace bestofn;

TEST_CASE("polya win probability") {
  CHECK(std::fabs(polya_win_probability(3, 3).value - 0.5) < 1e-11);
  // N1=2, N2=1: antiderivative of 2(2-x)^{-3} gives 3/4, which is also
  // P(Beta(2,1) > 1/2).
  CHECK(std::fabs(polya_win_probability(2, 1).value - 0.75) < 1e-11);
  CHECK(std::fabs(polya_win_probability(1, 2).value - 0.25) < 1e-11);
  CHECK_THROWS_AS(polya_win_probability(0, 1), std::invalid_argument);
}

TEST_CASE("zeta density") {
  // N1=N2=1: continuous at 0 with value 1/4.
  CHECK(zeta_density(1, 1, 0.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(zeta_density(1, 1, 1.5), std::invalid_argument);
  for (double x = -1.0; x <= 1.0; x += 0.05) CHECK(zeta_density(2, 3, x) >= 0.0);
  // unit mass and the win-probability identity int_0^1 f = P(win)
  const auto mass =
      integrate([](double x) { return zeta_density(2, 3, x); }, -1.0, 1.0, 1e-12);
  CHECK(std::fabs(mass.value - 1.0) < 1e-10);
  const auto pos =
      integrate([](double x) { return zeta_density(2, 3, x); }, 0.0, 1.0, 1e-12);
  CHECK(std::fabs(pos.value - polya_win_probability(2, 3).value) < 1e-10);
}

TEST_CASE("symmetric expected profit") {
  const auto p2 = polya_symmetric_expected_profit(2);
  CHECK(p2.has_exact);
  CHECK(p2.closed_exact == Rational(1));  // 24/8 - 2
  CHECK_THROWS_AS(polya_symmetric_expected_profit(1), std::invalid_argument);

  const auto p5 = polya_symmetric_expected_profit(5, 1e-12);
  CHECK(p5.closed_exact == Rational(935, 512));
  CHECK(std::fabs(p5.quadrature_form - p5.closed_form) < 1e-10);

  // log-gamma path matches the exact path where both are available
  const auto exact_40 = polya_symmetric_expected_profit(40);
  const auto float_40 = polya_symmetric_expected_profit(40, 1e-10, /*exact_cap=*/10);
  CHECK(!float_40.has_exact);
  CHECK(float_40.closed_form ==
        doctest::Approx(exact_40.closed_form).epsilon(1e-9));
}

TEST_CASE("beta and gamma samplers hit their moments") {
  Xoshiro256pp rng(11);
  double sum = 0.0, sumsq = 0.0;
  const int trials = 200000;
  for (int i = 0; i < trials; ++i) {
    const double g = sample_gamma_integer(3, 2.0, rng);
    sum += g;
    sumsq += g * g;
  }
  const double mean = sum / trials;
  CHECK(mean == doctest::Approx(1.5).epsilon(0.01));
  CHECK(sumsq / trials - mean * mean == doctest::Approx(0.75).epsilon(0.03));

  double bsum = 0.0;
  for (int i = 0; i < trials; ++i) bsum += sample_beta_integer(2, 3, rng);
  CHECK(bsum / trials == doctest::Approx(0.4).epsilon(0.01));
}

TEST_CASE("beta mixture sampler produces valid outcomes") {
  Xoshiro256pp rng(5);
  for (int i = 0; i < 1000; ++i) {
    const GameOutcome o = beta_mixture_sample(1, 1, 4, rng);
    CHECK(o.rounds == 4 + o.opponent_wins);
    CHECK(o.opponent_wins >= 0);
    CHECK(o.opponent_wins < 4);
  }
}
