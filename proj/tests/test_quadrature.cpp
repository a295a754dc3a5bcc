#include "bestofn/quadrature.hpp"

#include <cmath>

#include "doctest.h"

using namespace bestofn;

TEST_CASE("smooth integrands at tight tolerance") {
  const auto s = integrate([](double x) { return std::sin(x); }, 0.0, M_PI,
                           1e-12);
  CHECK(std::fabs(s.value - 2.0) < 1e-12);

  const auto e = integrate([](double x) { return std::exp(-x * x); }, -8.0,
                           8.0, 1e-12);
  CHECK(std::fabs(e.value - std::sqrt(M_PI)) < 1e-11);
}

TEST_CASE("adaptive refinement handles a sharp peak") {
  // Lorentzian of width 1e-4 centered mid-interval.
  const double w = 1e-4;
  const auto r = integrate(
      [=](double x) { return w / (w * w + (x - 0.3) * (x - 0.3)); }, 0.0, 1.0,
      1e-10);
  const double exact = std::atan(0.7 / w) - std::atan(-0.3 / w);
  CHECK(std::fabs(r.value - exact) < 1e-9);
  CHECK(r.panels > 2);
}

TEST_CASE("budget exhaustion raises with the achieved estimate") {
  const double w = 1e-6;
  CHECK_THROWS_AS(
      integrate([=](double x) { return w / (w * w + x * x); }, -1.0, 1.0,
                1e-14, 3),
      QuadratureError);
}

TEST_CASE("invalid tolerance") {
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, 0.0),
                  std::invalid_argument);
}
