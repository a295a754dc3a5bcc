#include "bestofn/polya.hpp"

#include <cmath>
#include <stdexcept>

namespace bestofn {

namespace {

// Gamma(N1+N2) / (Gamma(N1) Gamma(N2)) for integer arguments.
double beta_prefactor(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("require N1, N2 >= 1");
  BigInt num = factorial(static_cast<unsigned long>(n1 + n2 - 1));
  BigInt den = factorial(static_cast<unsigned long>(n1 - 1)) *
               factorial(static_cast<unsigned long>(n2 - 1));
  return Rational(num, den).get_d();
}

}  // namespace

QuadratureResult polya_win_probability(int n1, int n2, double tol) {
  const double pref = beta_prefactor(n1, n2);
  auto integrand = [=](double x) {
    return pref * std::pow(1.0 - x, n2 - 1) / std::pow(2.0 - x, n1 + n2);
  };
  return integrate(integrand, 0.0, 1.0, tol);
}

double zeta_density(int n1, int n2, double x) {
  if (std::fabs(x) > 1.0)
    throw std::invalid_argument("zeta density is supported on [-1, 1]");
  const double pref = beta_prefactor(n1, n2);
  const double ax = std::fabs(x);
  const int exponent = x >= 0.0 ? n2 - 1 : n1 - 1;
  return pref * std::pow(1.0 - ax, exponent) / std::pow(2.0 - ax, n1 + n2);
}

PolyaProfit polya_symmetric_expected_profit(int n, double tol, int exact_cap) {
  if (n < 2) throw std::invalid_argument("closed form requires n >= 2");
  PolyaProfit out;
  out.asymptotic = 2.0 * std::sqrt(n / M_PI) - 1.0;

  if (n <= exact_cap) {
    // ((2n)! / ((n-1)!^2 2^{2n-1}) - n) / (n-1), exactly.
    BigInt fact2n = factorial(static_cast<unsigned long>(2 * n));
    BigInt factn1 = factorial(static_cast<unsigned long>(n - 1));
    BigInt den = factn1 * factn1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(2 * n - 1));
    Rational q(fact2n, den);
    q.canonicalize();
    out.closed_exact = (q - n) / (n - 1);
    out.has_exact = true;
    out.closed_form = out.closed_exact.get_d();
  } else {
    const double log_ratio = std::lgamma(2.0 * n + 1.0) -
                             2.0 * std::lgamma(static_cast<double>(n)) -
                             (2.0 * n - 1.0) * std::log(2.0);
    out.closed_form = (std::exp(log_ratio) - n) / (n - 1.0);
  }

  // Equivalent integral form:
  //   (2n)!/(n-1)!^2 * int_0^1 x (1-x)^{n-1} / (2-x)^{2n} dx.
  // The prefactor is huge and the integral tiny, so fold the prefactor
  // into the integrand on a log scale.
  const double log_pref = std::lgamma(2.0 * n + 1.0) -
                          2.0 * std::lgamma(static_cast<double>(n));
  auto integrand = [=](double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return std::exp(log_pref + std::log(x) + (n - 1.0) * std::log1p(-x) -
                    2.0 * n * std::log(2.0 - x));
  };
  out.quadrature_form =
      integrate(integrand, 0.0, 1.0, tol * std::max(1.0, out.closed_form))
          .value;
  return out;
}

}  // namespace bestofn
