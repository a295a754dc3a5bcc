#include "bestofn/formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace bestofn {

namespace {

// Exact q^e for canonical q; numerator and denominator powered separately.
Rational pow_rational(const Rational& base, unsigned long e) {
  Rational r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return r;
}

}  // namespace

std::vector<BigInt> catalan_numbers(int m) {
  if (m < 0) throw std::invalid_argument("catalan_numbers: m must be >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(m) + 1);
  c[0] = 1;
  for (int j = 0; j < m; ++j) {
    // C_{j+1} = C_j * 2(2j+1) / (j+2); the division is exact.
    BigInt t = c[static_cast<std::size_t>(j)] * (2 * (2 * j + 1));
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(),
                    static_cast<unsigned long>(j + 2));
    c[static_cast<std::size_t>(j) + 1] = t;
  }
  return c;
}

Rational expected_profit_catalan(int n, const Rational& p) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const Rational q = Rational(1) - p;
  const Rational mu = p - q;
  const Rational z = p * q;
  const auto catalan = catalan_numbers(n - 1);
  Rational sum = 0;
  Rational zpow = 1;
  for (int j = 0; j < n; ++j) {
    sum += catalan[static_cast<std::size_t>(j)] * zpow;
    zpow *= z;
  }
  return n * mu * sum;
}

double expected_profit_catalan_f(int n, double p) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double z = p * (1.0 - p);
  double term = 1.0;  // C_j z^j
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    sum += term;
    term *= z * (2.0 * (2 * j + 1)) / (j + 2);
  }
  return n * (2.0 * p - 1.0) * sum;
}

double catalan_partial_sum(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  double term = 1.0;  // C_j / 4^j
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    sum += term;
    term *= (2.0 * (2 * j + 1)) / (4.0 * (j + 2));
  }
  return sum;
}

Rational win_margin_pmf_exact(int n, int k, const Rational& theta) {
  if (k < 0 || k >= n) throw std::invalid_argument("k must be in [0, n-1]");
  Rational r = binomial(static_cast<unsigned long>(n + k - 1),
                        static_cast<unsigned long>(k)) *
               pow_rational(theta, static_cast<unsigned long>(n)) *
               pow_rational(Rational(1) - theta, static_cast<unsigned long>(k));
  r.canonicalize();
  return r;
}

double win_margin_pmf_f(int n, int k, double theta) {
  if (k < 0 || k >= n) throw std::invalid_argument("k must be in [0, n-1]");
  return negbin_approx_pmf(n, k, theta);
}

double negbin_approx_pmf(int n, int k, double p) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  const double log_pmf = std::lgamma(n + k) - std::lgamma(k + 1.0) -
                         std::lgamma(static_cast<double>(n)) +
                         n * std::log(p) + k * std::log1p(-p);
  return std::exp(log_pmf);
}

double approx_error_bound(int n, double p) {
  return std::pow(4.0 * p * (1.0 - p), n);
}

Rational approx_error_bound_exact(int n, const Rational& p) {
  Rational z = 4 * p * (Rational(1) - p);
  z.canonicalize();
  return pow_rational(z, static_cast<unsigned long>(n));
}

BoundReport make_bound_report(std::string name, double bound, double observed,
                              bool upper) {
  BoundReport r;
  r.name = std::move(name);
  r.bound = bound;
  r.observed = observed;
  r.upper = upper;
  r.satisfied = upper ? observed <= bound : observed >= bound;
  return r;
}

std::vector<BoundReport> martingale_bounds(int n, double p, double e_tau,
                                           double e_z, double e_abs_z) {
  const double q = 1.0 - p;
  const double mu = p - q;
  std::vector<BoundReport> out;
  out.push_back(make_bound_report("E_tau <= 2n/(1+|mu|)",
                                  2.0 * n / (1.0 + std::fabs(mu)), e_tau,
                                  /*upper=*/true));
  out.push_back(make_bound_report("|E_Z| <= n|mu|/max(p,q)",
                                  n * std::fabs(mu) / std::max(p, q),
                                  std::fabs(e_z), /*upper=*/true));
  if (p == 0.5) {
    const double s = (std::sqrt(8.0 * n + 1.0) - 1.0) / 2.0;
    out.push_back(make_bound_report("E_tau >= 2n - (sqrt(8n+1)-1)/2",
                                    2.0 * n - s, e_tau, /*upper=*/false));
    out.push_back(make_bound_report("E|Z| <= (sqrt(8n+1)-1)/2", s, e_abs_z,
                                    /*upper=*/true));
  }
  return out;
}

double gamma_race_bound(int n, double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0))
    throw std::invalid_argument("lambda must be in (0, 1]");
  return std::pow(4.0 * lambda / ((lambda + 1.0) * (lambda + 1.0)), n);
}

double negbin_tail_bound(double m, double a) {
  if (m < 1.0 || a < 0.0)
    throw std::invalid_argument("require m >= 1, a >= 0");
  return 2.0 * std::exp(-a * a / (4.0 * (a + m)));
}

Rational antiok_exact_prob(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
  // n * prod_{i<k} (n-i) / prod_{i<=k} (2n-i)
  BigInt num = n;
  for (int i = 0; i < k; ++i) num *= (n - i);
  BigInt den = 1;
  for (int i = 0; i <= k; ++i) den *= (2 * n - i);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double antiok_exact_prob_f(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("k must be in [1, n]");
  const double log_p = std::log(static_cast<double>(n)) +
                       std::lgamma(2.0 * n - k) + std::lgamma(n + 1.0) -
                       std::lgamma(2.0 * n + 1.0) - std::lgamma(n - k + 1.0);
  return std::exp(log_p);
}

double antiok_limit_pmf(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return std::ldexp(1.0, -(k + 1));
}

bool verify_identity_ident(int a, int b, int m) {
  if (m < 0 || b < 0 || a < b + m)
    throw std::invalid_argument("identity requires a >= b+m, m >= 0, b >= 0");
  BigInt lhs = 0;
  for (int k = 0; k <= m; ++k) {
    BigInt term = binomial(static_cast<unsigned long>(a + k),
                           static_cast<unsigned long>(a)) *
                  binomial(static_cast<unsigned long>(b),
                           static_cast<unsigned long>(m - k));
    lhs += (k % 2 == 0) ? term : -term;
  }
  BigInt rhs = binomial(static_cast<unsigned long>(a - b + m),
                        static_cast<unsigned long>(m));
  if (m % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

bool verify_identity_lemmain(int n, int j) {
  if (j < 0 || j >= n) throw std::invalid_argument("require 0 <= j <= n-1");
  BigInt lhs = 0;
  for (int k = 0; k <= j; ++k) {
    BigInt term = binomial(static_cast<unsigned long>(n - 1 + k),
                           static_cast<unsigned long>(k)) *
                  binomial(static_cast<unsigned long>(n - 1 - j),
                           static_cast<unsigned long>(j - k)) *
                  (n - k);
    lhs += (k % 2 == 0) ? term : -term;
  }
  BigInt rhs = n * catalan_numbers(j)[static_cast<std::size_t>(j)];
  if (j % 2 != 0) rhs = -rhs;
  return lhs == rhs;
}

bool verify_a_m_expansion(int m, const Rational& p) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const Rational q = Rational(1) - p;
  if (p == q)
    throw std::invalid_argument("A_m is defined through p != q");
  Rational pm = 1, qm = 1;
  for (int i = 0; i < m; ++i) { pm *= p; qm *= q; }
  const Rational a_m = (pm - qm) / (p - q);

  const Rational z = p * q;
  Rational sum = 0, zpow = 1;
  for (int i = 0; 2 * i <= m - 1; ++i) {
    Rational term = binomial(static_cast<unsigned long>(m - 1 - i),
                             static_cast<unsigned long>(i)) *
                    zpow;
    sum += (i % 2 == 0) ? term : -term;
    zpow *= z;
  }
  return a_m == sum;
}

}  // namespace bestofn
