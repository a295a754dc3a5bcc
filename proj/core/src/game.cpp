#include "bestofn/game.hpp"

namespace bestofn {

Regime Regime::constant(int n, Rational p) {
  Regime r;
  r.kind = RegimeKind::Constant;
  r.target_n = n;
  r.p = std::move(p);
  r.p.canonicalize();
  r.validate();
  return r;
}

Regime Regime::polya(int n, int n1, int n2) {
  Regime r;
  r.kind = RegimeKind::Polya;
  r.target_n = n;
  r.n1 = n1;
  r.n2 = n2;
  r.validate();
  return r;
}

Regime Regime::anti_ok_corral(int n) {
  Regime r;
  r.kind = RegimeKind::AntiOkCorral;
  r.target_n = n;
  r.validate();
  return r;
}

void Regime::validate() const {
  if (target_n < 1) throw std::invalid_argument("target_n must be >= 1");
  switch (kind) {
    case RegimeKind::Constant:
      if (!(p > 0 && p < 1))
        throw std::invalid_argument("constant regime requires 0 < p < 1");
      break;
    case RegimeKind::Polya:
      if (n1 < 1 || n2 < 1)
        throw std::invalid_argument("polya regime requires N1, N2 >= 1");
      break;
    case RegimeKind::AntiOkCorral:
      break;  // urn contents are fixed by target_n
  }
}

std::string Regime::kind_name() const {
  switch (kind) {
    case RegimeKind::Constant:     return "constant";
    case RegimeKind::Polya:        return "polya";
    case RegimeKind::AntiOkCorral: return "antiok";
  }
  return "?";
}

GameOutcome make_outcome(int n, Player winner, int opponent_wins) {
  if (opponent_wins < 0 || opponent_wins >= n)
    throw std::logic_error("opponent_wins out of [0, n-1]");
  GameOutcome o;
  o.winner = winner;
  o.opponent_wins = opponent_wins;
  o.rounds = n + opponent_wins;
  o.net_profit = winner == Player::One ? n - opponent_wins
                                       : opponent_wins - n;
  return o;
}

namespace detail {
void check_non_absorbing(const Regime& regime, GameState state) {
  const int n = regime.target_n;
  if (state.a < 0 || state.b < 0 || state.a >= n || state.b >= n)
    throw std::logic_error("state is absorbing or out of range");
}
}  // namespace detail

Rational round_win_probability(const Regime& regime, GameState state) {
  detail::check_non_absorbing(regime, state);
  Rational r;
  switch (regime.kind) {
    case RegimeKind::Constant:
      return regime.p;
    case RegimeKind::Polya:
      r = Rational(regime.n1 + state.a,
                   regime.n1 + regime.n2 + state.round());
      break;
    case RegimeKind::AntiOkCorral:
      r = Rational(regime.target_n - state.a,
                   2 * regime.target_n - state.round());
      break;
  }
  r.canonicalize();
  return r;
}

double round_win_probability_f(const Regime& regime, GameState state) {
  detail::check_non_absorbing(regime, state);
  switch (regime.kind) {
    case RegimeKind::Constant:
      return to_double(regime.p);
    case RegimeKind::Polya:
      return static_cast<double>(regime.n1 + state.a) /
             (regime.n1 + regime.n2 + state.round());
    case RegimeKind::AntiOkCorral:
      return static_cast<double>(regime.target_n - state.a) /
             (2 * regime.target_n - state.round());
  }
  throw std::logic_error("unreachable");
}

GameState step(const Regime& regime, GameState state, bool player1_won_round) {
  detail::check_non_absorbing(regime, state);
  if (player1_won_round) ++state.a; else ++state.b;
  return state;
}

}  // namespace bestofn
