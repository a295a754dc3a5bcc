#pragma once

#include <string>
#include <vector>

#include "bestofn/rational.hpp"

namespace bestofn {

/// Catalan numbers C_0 .. C_m via the multiplicative recurrence
/// C_{j+1} (j+2) = C_j 2(2j+1).
std::vector<BigInt> catalan_numbers(int m);

/// E[Z] for the constant regime: n (p-q) sum_{j<n} C_j (pq)^j.
/// Antisymmetric under p <-> 1-p, so valid on all of (0,1).
Rational expected_profit_catalan(int n, const Rational& p);
double expected_profit_catalan_f(int n, double p);

/// Partial sum sum_{j<n} C_j 4^{-j}; increases monotonically to 2.
double catalan_partial_sum(int n);

/// h(theta, k) = C(n+k-1, k) theta^n (1-theta)^k: probability the
/// theta-player reaches n wins while the opponent holds k.
Rational win_margin_pmf_exact(int n, int k, const Rational& theta);
double win_margin_pmf_f(int n, int k, double theta);

/// Negative binomial main term of P(W = k): C(n+k-1, n-1) q^k p^n,
/// supported on all k >= 0 (unlike the true W).
double negbin_approx_pmf(int n, int k, double p);

/// (4pq)^n, the error bound on the negative-binomial approximation.
double approx_error_bound(int n, double p);
Rational approx_error_bound_exact(int n, const Rational& p);

/// One-sided bound paired with an observed value.
struct BoundReport {
  std::string name;
  double bound = 0.0;
  double observed = 0.0;
  bool upper = true;  // true: observed <= bound expected
  bool satisfied = false;
};

BoundReport make_bound_report(std::string name, double bound, double observed,
                              bool upper);

/// Optional-stopping bounds on E[tau] and |E[Z]|; at p = 1/2 additionally
/// the lower bound on E[tau] and the upper bound on E|Z|.
std::vector<BoundReport> martingale_bounds(int n, double p, double e_tau,
                                           double e_z, double e_abs_z);

/// Chernoff bound (4 lambda / (lambda+1)^2)^n on P(tau_X >= tau_Y) for
/// independent Gamma(n,1) vs Gamma(n,lambda), 0 < lambda <= 1.
double gamma_race_bound(int n, double lambda);

/// Tail bound 2 exp(-a^2 / (4(a+m))) for NegBin(m, 1/2) around its mean m.
double negbin_tail_bound(double m, double a);

/// Anti-OK Corral: P(a fixed player wins overall with the opponent at
/// n-k wins) = n (2n-1-k)! n! / ((2n)! (n-k)!), for k in 1..n.
Rational antiok_exact_prob(int n, int k);
double antiok_exact_prob_f(int n, int k);

/// Limiting per-player pmf 2^{-(k+1)}, k >= 1.
double antiok_limit_pmf(int k);

/// Alternating Vandermonde-style identity
/// sum_{k<=m} (-1)^k C(a+k, a) C(b, m-k) = (-1)^m C(a-b+m, m),
/// valid under a >= b+m, m >= 0, b >= 0. Exact big-integer check.
bool verify_identity_ident(int a, int b, int m);

/// sum_{k<=j} C(n-1+k, k) C(n-1-j, j-k) (-1)^k (n-k) = (-1)^j n C_j.
bool verify_identity_lemmain(int n, int j);

/// A_m = (p^m - q^m)/(p - q) equals sum_i C(m-1-i, i) (-pq)^i.
bool verify_a_m_expansion(int m, const Rational& p);

}  // namespace bestofn
