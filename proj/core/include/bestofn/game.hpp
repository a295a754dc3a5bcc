#pragma once

#include <stdexcept>
#include <string>

#include "bestofn/rational.hpp"

namespace bestofn {

enum class Player { One, Two };

enum class RegimeKind { Constant, Polya, AntiOkCorral };

/// Round-probability regime plus the winning target n.
///
/// Constant:      Player 1 wins every round with fixed probability p.
/// Polya:         urn starts with N1 / N2 balls; a drawn ball is returned
///                together with one more of the same type.
/// AntiOkCorral:  urn starts with exactly n balls of each type, drawn
///                without replacement; the player whose type empties first
///                (i.e. who wins n rounds) wins the game.
struct Regime {
  RegimeKind kind = RegimeKind::Constant;
  int target_n = 1;
  Rational p;       // Constant only
  int n1 = 1;       // Polya only
  int n2 = 1;       // Polya only

  static Regime constant(int n, Rational p);
  static Regime polya(int n, int n1, int n2);
  static Regime anti_ok_corral(int n);

  /// Throws std::invalid_argument if any invariant fails.
  void validate() const;

  std::string kind_name() const;
};

/// Win counts so far: a for Player 1, b for Player 2. Round index is a+b;
/// the running win difference X_k is a-b. Ball type 1 is identified with
/// Player 1 throughout, so in the anti-OK model the remaining ball
/// difference D_k equals -(a-b).
struct GameState {
  int a = 0;
  int b = 0;
  int round() const { return a + b; }
  int win_diff() const { return a - b; }
};

struct GameOutcome {
  Player winner = Player::One;
  int opponent_wins = 0;  // W: rounds won by the eventual loser
  int rounds = 0;         // tau = n + W
  int net_profit = 0;     // Z, signed positive for Player 1
};

GameOutcome make_outcome(int n, Player winner, int opponent_wins);

/// P(Player 1 wins the next round) as an exact rational.
/// Requires a non-absorbing state (a < n and b < n); throws otherwise.
Rational round_win_probability(const Regime& regime, GameState state);

/// Same, evaluated in double arithmetic (for simulation and float DP).
double round_win_probability_f(const Regime& regime, GameState state);

/// Advances the state by one round. Throws std::logic_error when the
/// state is already absorbing or out of range.
GameState step(const Regime& regime, GameState state, bool player1_won_round);

namespace detail {
void check_non_absorbing(const Regime& regime, GameState state);
}

/// Plays one full match, consuming exactly `rounds` draws from the rng.
template <class Rng>
GameOutcome play_match(const Regime& regime, Rng& rng) {
  regime.validate();
  const int n = regime.target_n;
  GameState s;
  if (regime.kind == RegimeKind::Constant) {
    const std::uint64_t thresh =
        Rng::bernoulli_threshold(to_double(regime.p));
    while (s.a < n && s.b < n) {
      if (rng.next() < thresh) ++s.a; else ++s.b;
    }
  } else {
    while (s.a < n && s.b < n) {
      if (rng.bernoulli(round_win_probability_f(regime, s))) ++s.a; else ++s.b;
    }
  }
  return s.a == n ? make_outcome(n, Player::One, s.b)
                  : make_outcome(n, Player::Two, s.a);
}

}  // namespace bestofn
