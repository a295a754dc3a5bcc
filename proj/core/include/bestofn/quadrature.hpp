#pragma once

#include <functional>
#include <stdexcept>

namespace bestofn {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Raised when the subdivision budget runs out before the tolerance is
/// met; carries the best estimate achieved so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& msg, QuadratureResult achieved)
      : std::runtime_error(msg), achieved_(achieved) {}
  const QuadratureResult& achieved() const { return achieved_; }

 private:
  QuadratureResult achieved_;
};

/// Adaptive 15-point Gauss-Legendre with recursive bisection; the panel
/// error estimate is |GL15(panel) - GL15(left) - GL15(right)|. Absolute
/// error target.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, int max_depth = 40);

}  // namespace bestofn
