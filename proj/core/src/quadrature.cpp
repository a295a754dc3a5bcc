#include "bestofn/quadrature.hpp"

#include <array>
#include <cmath>

namespace bestofn {

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (positive half; the
// rule is symmetric).
constexpr std::array<double, 8> kNodes = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601700,
    0.8482065834104272,
    0.9372733924007059,
    0.9879925180204854,
};
constexpr std::array<double, 8> kWeights = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};

double gl15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double sum = kWeights[0] * f(c);
  for (std::size_t i = 1; i < kNodes.size(); ++i) {
    const double dx = h * kNodes[i];
    sum += kWeights[i] * (f(c - dx) + f(c + dx));
  }
  return sum * h;
}

struct Accum {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

void adapt(const std::function<double(double)>& f, double a, double b,
           double whole, double tol, int depth, Accum& acc) {
  const double m = 0.5 * (a + b);
  const double left = gl15(f, a, m);
  const double right = gl15(f, m, b);
  const double err = std::fabs(left + right - whole);
  if (err <= tol || depth <= 0) {
    if (err > tol)
      throw QuadratureError("quadrature subdivision budget exhausted",
                            {acc.value + left + right, acc.error + err,
                             acc.panels + 2});
    acc.value += left + right;
    acc.error += err;
    acc.panels += 2;
    return;
  }
  adapt(f, a, m, left, 0.5 * tol, depth - 1, acc);
  adapt(f, m, b, right, 0.5 * tol, depth - 1, acc);
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, int max_depth) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
  Accum acc;
  adapt(f, a, b, gl15(f, a, b), abs_tol, max_depth, acc);
  return {acc.value, acc.error, acc.panels};
}

}  // namespace bestofn
