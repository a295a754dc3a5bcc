#include "bestofn/formulas.hpp"

#include <cmath>

#include "bestofn/exact.hpp"
#include "doctest.h"

using namespace bestofn;

TEST_CASE("catalan numbers") {
  const auto c = catalan_numbers(10);
  const long expected[] = {1, 1, 2, 5, 14, 42, 132};
  for (int j = 0; j <= 6; ++j)
    CHECK(c[static_cast<std::size_t>(j)] == expected[j]);
  CHECK(c[10] == 16796);
  CHECK(catalan_numbers(0).size() == 1);
  // C_j = (2j)!/(j!(j+1)!) directly
  for (int j = 0; j <= 10; ++j)
    CHECK(c[static_cast<std::size_t>(j)] ==
          factorial(2 * static_cast<unsigned long>(j)) /
              (factorial(static_cast<unsigned long>(j)) *
               factorial(static_cast<unsigned long>(j) + 1)));
}

TEST_CASE("expected profit via catalan sum") {
  CHECK(expected_profit_catalan(1, Rational(3, 5)) == Rational(1, 5));
  CHECK(expected_profit_catalan(2, Rational(3, 5)) == Rational(62, 125));
  CHECK(expected_profit_catalan(7, Rational(1, 2)) == Rational(0));
  // antisymmetry under p <-> q
  for (int n : {1, 3, 10}) {
    CHECK(expected_profit_catalan(n, Rational(7, 10)) ==
          -expected_profit_catalan(n, Rational(3, 10)));
  }
  CHECK(expected_profit_catalan_f(2, 0.6) == doctest::Approx(62.0 / 125));
}

TEST_CASE("catalan partial sum approaches 2") {
  CHECK(catalan_partial_sum(1) == 1.0);
  CHECK(catalan_partial_sum(3) == doctest::Approx(1.375));
  const double s = catalan_partial_sum(10000);
  CHECK(s < 2.0);
  CHECK(2.0 - s < 0.02);
  // monotone in n
  CHECK(catalan_partial_sum(100) < catalan_partial_sum(101));
}

TEST_CASE("win margin pmf") {
  CHECK(win_margin_pmf_exact(3, 0, Rational(3, 5)) == Rational(27, 125));
  CHECK(win_margin_pmf_exact(2, 1, Rational(3, 5)) == Rational(36, 125));
  CHECK(win_margin_pmf_exact(1, 0, Rational(3, 5)) == Rational(3, 5));
  CHECK_THROWS_AS(win_margin_pmf_exact(3, 3, Rational(1, 2)),
                  std::invalid_argument);

  // reproduces the constant-regime DP entrywise
  const Rational p(7, 10);
  const auto dist = exact_distribution(Regime::constant(8, p));
  for (int k = 0; k < 8; ++k) {
    CHECK(dist.p1_margin[static_cast<std::size_t>(k)] ==
          win_margin_pmf_exact(8, k, p));
    CHECK(dist.p2_margin[static_cast<std::size_t>(k)] ==
          win_margin_pmf_exact(8, k, Rational(3, 10)));
  }
}

TEST_CASE("negative binomial main term") {
  // n=1: geometric on {0,1,2,...}
  for (int k = 0; k < 6; ++k)
    CHECK(negbin_approx_pmf(1, k, 0.7) ==
          doctest::Approx(0.7 * std::pow(0.3, k)));
  // normalization over an effectively full support
  double sum = 0.0;
  for (int k = 0; k < 400; ++k) sum += negbin_approx_pmf(10, k, 0.6);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("approximation error bound") {
  CHECK(approx_error_bound(5, 0.5) == 1.0);
  CHECK(approx_error_bound_exact(2, Rational(3, 5)) == Rational(576, 625));
  CHECK(approx_error_bound(40, 0.99) < 1e-50);
}

TEST_CASE("martingale bounds") {
  auto b = martingale_bounds(10, 0.5, 19.0, 0.0, 2.0);
  CHECK(b[0].bound == doctest::Approx(20.0));
  REQUIRE(b.size() == 4);
  CHECK(b[3].bound == doctest::Approx((std::sqrt(81.0) - 1) / 2));
  // n=2, p=1/2: E|Z| bound (sqrt(17)-1)/2
  auto b2 = martingale_bounds(2, 0.5, 0.0, 0.0, 0.0);
  CHECK(b2[3].bound == doctest::Approx((std::sqrt(17.0) - 1) / 2));
  // n=10, p=0.6
  auto b3 = martingale_bounds(10, 0.6, 16.0, 3.0, 3.0);
  CHECK(b3.size() == 2);
  CHECK(b3[0].bound == doctest::Approx(20.0 / 1.2));
  CHECK(b3[1].bound == doctest::Approx(10.0 * 0.2 / 0.6));
  CHECK(b3[0].satisfied);
}

TEST_CASE("gamma race and negbin tail bounds") {
  CHECK(gamma_race_bound(7, 1.0) == 1.0);
  CHECK(gamma_race_bound(10, 2.0 / 3) ==
        doctest::Approx(std::pow(24.0 / 25, 10)));
  CHECK_THROWS_AS(gamma_race_bound(3, 1.5), std::invalid_argument);

  CHECK(negbin_tail_bound(100, 0) == 2.0);
  CHECK(negbin_tail_bound(100, 40) ==
        doctest::Approx(2.0 * std::exp(-1600.0 / 560)));
}

TEST_CASE("anti-OK exact probability") {
  CHECK(antiok_exact_prob(1, 1) == Rational(1, 2));
  for (int n : {2, 5, 40}) {
    // k=1 closes to (1/2) n/(2n-1)
    Rational closed(n, 2 * (2 * n - 1));
    closed.canonicalize();
    CHECK(antiok_exact_prob(n, 1) == closed);
    Rational sum = 0;
    for (int k = 1; k <= n; ++k) sum += antiok_exact_prob(n, k);
    CHECK(2 * sum == 1);
  }
  CHECK_THROWS_AS(antiok_exact_prob(5, 0), std::invalid_argument);
  CHECK_THROWS_AS(antiok_exact_prob(5, 6), std::invalid_argument);
  CHECK(antiok_exact_prob_f(50, 3) ==
        doctest::Approx(to_double(antiok_exact_prob(50, 3))));
}

TEST_CASE("anti-OK limit pmf") {
  CHECK(antiok_limit_pmf(1) == 0.25);
  double sum = 0.0;
  for (int k = 1; k < 60; ++k) sum += 2.0 * antiok_limit_pmf(k);
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("combinatorial identities") {
  CHECK(verify_identity_ident(5, 2, 0));
  CHECK(verify_identity_ident(2, 1, 1));  // 1 - 3 = -C(2,1)
  CHECK_THROWS_AS(verify_identity_ident(2, 2, 1), std::invalid_argument);

  CHECK(verify_identity_lemmain(7, 0));
  CHECK(verify_identity_lemmain(5, 2));  // 3-term sum equals 10
  CHECK_THROWS_AS(verify_identity_lemmain(5, 5), std::invalid_argument);

  for (int m = 1; m <= 12; ++m) CHECK(verify_a_m_expansion(m, Rational(3, 5)));
  CHECK_THROWS_AS(verify_a_m_expansion(3, Rational(1, 2)),
                  std::invalid_argument);
}
