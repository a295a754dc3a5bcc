#include "bestofn/exact.hpp"

#include <cmath>

#include "bestofn/verify.hpp"
#include "doctest.h"

using namespace bestofn;

TEST_CASE("n=1 distributions") {
  const auto c = exact_distribution(Regime::constant(1, Rational(3, 5)));
  CHECK(c.p1_margin[0] == Rational(3, 5));
  CHECK(c.p2_margin[0] == Rational(2, 5));

  const auto a = exact_distribution(Regime::anti_ok_corral(1));
  CHECK(a.p1_margin[0] == Rational(1, 2));
  CHECK(a.p2_margin[0] == Rational(1, 2));
}

TEST_CASE("constant p=3/5, n=2: hand-enumerated moments") {
  const auto dist = exact_distribution(Regime::constant(2, Rational(3, 5)));
  const auto m = expected_values(dist);
  // 2*(9/25) + 36/125 - 2*(4/25) - 24/125
  CHECK(m.e_z == Rational(62, 125));
  CHECK(dist.p1_margin[0] == Rational(9, 25));
  CHECK(dist.p1_margin[1] == Rational(36, 125));
  // E_tau = 2 + P(W = 1)
  CHECK(m.e_tau == Rational(2) + dist.p1_margin[1] + dist.p2_margin[1]);
}

TEST_CASE("normalization is exact in rational mode") {
  for (const Regime& regime :
       {Regime::constant(17, Rational(7, 10)), Regime::polya(17, 3, 2),
        Regime::anti_ok_corral(17)}) {
    CHECK(total_probability(exact_distribution(regime)) == Rational(1));
  }
}

TEST_CASE("symmetric regimes give symmetric margins") {
  for (const Regime& regime :
       {Regime::constant(9, Rational(1, 2)), Regime::polya(9, 4, 4),
        Regime::anti_ok_corral(9)}) {
    const auto dist = exact_distribution(regime);
    for (int k = 0; k < dist.n; ++k)
      CHECK(dist.p1_margin[static_cast<std::size_t>(k)] ==
            dist.p2_margin[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("exact-mode capacity error suggests float mode") {
  CHECK_THROWS_AS(exact_distribution(Regime::constant(600, Rational(1, 2))),
                  CapacityError);
  CHECK_NOTHROW(
      exact_distribution(Regime::constant(600, Rational(1, 2)), 1024));
}

TEST_CASE("float DP agrees with exact DP") {
  for (const Regime& regime :
       {Regime::constant(30, Rational(3, 5)), Regime::polya(30, 2, 1),
        Regime::anti_ok_corral(30)}) {
    const auto exact = exact_distribution(regime);
    const auto flt = exact_distribution_float(regime);
    for (int k = 0; k < 30; ++k) {
      CHECK(std::fabs(to_double(exact.p1_margin[static_cast<std::size_t>(k)]) -
                      flt.p1_margin[static_cast<std::size_t>(k)]) < 1e-14);
    }
    CHECK(std::fabs(total_probability(flt) - 1.0) < 1e-12);
  }
}

TEST_CASE("sample_path_probability") {
  // straight wins: p^n
  CHECK(sample_path_probability(Regime::constant(3, Rational(3, 5)),
                                {true, true, true}) == Rational(27, 125));
  // Polya(1,1), rounds P1,P2,P1 at n=2: (1/2)(1/3)(2/4)
  CHECK(sample_path_probability(Regime::polya(2, 1, 1),
                                {true, false, true}) == Rational(1, 12));
  // anti-OK n=2, P1,P1: (2/4)(1/3)
  CHECK(sample_path_probability(Regime::anti_ok_corral(2), {true, true}) ==
        Rational(1, 6));

  CHECK_THROWS_AS(
      sample_path_probability(Regime::constant(2, Rational(1, 2)), {true}),
      std::logic_error);
  CHECK_THROWS_AS(sample_path_probability(Regime::constant(2, Rational(1, 2)),
                                          {true, true, false}),
                  std::logic_error);
}

TEST_CASE("path enumeration oracle reproduces the DP exactly") {
  for (int n = 1; n <= 6; ++n) {
    for (const Regime& regime :
         {Regime::constant(n, Rational(3, 5)), Regime::polya(n, 2, 3),
          Regime::anti_ok_corral(n)}) {
      const auto dp = exact_distribution(regime);
      const auto enumerated = enumerate_distribution(regime);
      for (int k = 0; k < n; ++k) {
        CHECK(dp.p1_margin[static_cast<std::size_t>(k)] ==
              enumerated.p1_margin[static_cast<std::size_t>(k)]);
        CHECK(dp.p2_margin[static_cast<std::size_t>(k)] ==
              enumerated.p2_margin[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("json serialization carries mode and num/den strings") {
  const auto j = to_json(exact_distribution(Regime::constant(2, Rational(3, 5))));
  CHECK(j["mode"] == "exact-rational");
  CHECK(j["n"] == 2);
  CHECK(j["p1_margin"][0] == "9/25");

  const auto jf =
      to_json(exact_distribution_float(Regime::constant(2, Rational(3, 5))));
  CHECK(jf["mode"] == "float");
  CHECK(jf["p1_margin"][0].get<double>() == doctest::Approx(0.36));
}
