#include "bestofn/game.hpp"

#include "bestofn/rng.hpp"
#include "doctest.h"

using namespace bestofn;

TEST_CASE("regime validation") {
  CHECK_THROWS_AS(Regime::constant(3, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(Regime::constant(3, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(Regime::constant(0, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(Regime::polya(3, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Regime::anti_ok_corral(-1), std::invalid_argument);
  CHECK_NOTHROW(Regime::constant(1, Rational(1, 2)));
}

TEST_CASE("round win probability per regime") {
  CHECK(round_win_probability(Regime::constant(4, Rational(3, 5)), {0, 0}) ==
        Rational(3, 5));
  // Polya(1,1) at (2,1): urn holds 3 type-1 and 2 type-2 balls.
  CHECK(round_win_probability(Regime::polya(4, 1, 1), {2, 1}) ==
        Rational(3, 5));
  // anti-OK, n=3, state (1,0): 2 type-1 and 3 type-2 balls remain.
  CHECK(round_win_probability(Regime::anti_ok_corral(3), {1, 0}) ==
        Rational(2, 5));
  // Polya at the start: N1/(N1+N2); anti-OK at the start: exactly 1/2.
  CHECK(round_win_probability(Regime::polya(4, 2, 3), {0, 0}) ==
        Rational(2, 5));
  CHECK(round_win_probability(Regime::anti_ok_corral(7), {0, 0}) ==
        Rational(1, 2));

  const Regime r = Regime::constant(3, Rational(1, 2));
  CHECK_THROWS_AS(round_win_probability(r, {3, 0}), std::logic_error);
  CHECK_THROWS_AS(round_win_probability(r, {0, 3}), std::logic_error);
  CHECK_THROWS_AS(round_win_probability(r, {-1, 0}), std::logic_error);
}

TEST_CASE("step") {
  const Regime r = Regime::constant(3, Rational(1, 2));
  GameState s = step(r, {0, 0}, true);
  CHECK(s.a == 1);
  CHECK(s.b == 0);
  s = step(r, {2, 1}, false);
  CHECK(s.a == 2);
  CHECK(s.b == 2);
  CHECK_THROWS_AS(step(r, {3, 1}, true), std::logic_error);
}

TEST_CASE("outcome bookkeeping") {
  const GameOutcome o = make_outcome(5, Player::Two, 3);
  CHECK(o.rounds == 8);
  CHECK(o.net_profit == -2);
  CHECK_THROWS_AS(make_outcome(5, Player::One, 5), std::logic_error);
}

TEST_CASE("play_match invariants across regimes") {
  Xoshiro256pp rng(7);
  for (const Regime& regime :
       {Regime::constant(6, Rational(3, 5)), Regime::polya(6, 2, 3),
        Regime::anti_ok_corral(6)}) {
    for (int i = 0; i < 2000; ++i) {
      const GameOutcome o = play_match(regime, rng);
      CHECK(o.rounds == 6 + o.opponent_wins);
      CHECK(o.rounds >= 6);
      CHECK(o.rounds <= 11);
      const int abs_z = o.net_profit < 0 ? -o.net_profit : o.net_profit;
      CHECK(abs_z >= 1);
      CHECK(abs_z <= 6);
    }
  }
}

TEST_CASE("replaying the same seed yields the same outcome") {
  const Regime regime = Regime::polya(9, 2, 1);
  Xoshiro256pp a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const GameOutcome oa = play_match(regime, a);
    const GameOutcome ob = play_match(regime, b);
    CHECK(oa.winner == ob.winner);
    CHECK(oa.opponent_wins == ob.opponent_wins);
  }
}

TEST_CASE("anti-OK ball accounting along a forced path") {
  // Forced P1,P1 at n=2: probability weights 2/4 then 1/3; afterwards the
  // two remaining balls are both of type 2 (the loser's type).
  const Regime regime = Regime::anti_ok_corral(2);
  GameState s;
  CHECK(round_win_probability(regime, s) == Rational(1, 2));
  s = step(regime, s, true);
  CHECK(round_win_probability(regime, s) == Rational(1, 3));
  s = step(regime, s, true);
  CHECK(s.a == 2);
  CHECK(2 - s.a == 0);  // type-1 exhausted
  CHECK(2 - s.b == 2);  // both leftovers belong to Player 2
}
