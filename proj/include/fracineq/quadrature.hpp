#pragma once
// Adaptive Gauss-Legendre quadrature with endpoint-weight support, plus the
// left/right fractional integral operators built on top of it.

#include <functional>
#include <stdexcept>
#include <string>

namespace fracineq::quad {

// How integrable endpoint singularities are treated.  `substitution` maps the
// weighted integral onto a smooth one before adapting (the production path);
// `panel_refinement` integrates the raw product and relies on bisection alone
// (kept for smoke comparisons; converges slowly near singular endpoints).
enum class SingularityPolicy { substitution, panel_refinement };

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_panels = 4096;
  int nodes_per_panel = 15;
  SingularityPolicy singularity_policy = SingularityPolicy::substitution;
};

// Weight attached to the integrand on [lo, hi].  The power weights take the
// exponent `alpha` with the convention that the density is
//   left_power:  (hi - t)^(alpha - 1)   (singular at hi for alpha < 1)
//   right_power: (t - lo)^(alpha - 1)   (singular at lo for alpha < 1)
// and the square-root weights act on the normalized coordinate
// s = (t - lo)/(hi - lo):
//   sqrt_left:  sqrt(s) / sqrt(1 - s)
//   sqrt_right: sqrt(1 - s) / sqrt(s)
struct WeightKind {
  enum class Type { none, left_power, right_power, sqrt_left, sqrt_right };
  Type type = Type::none;
  double exponent = 1.0;

  static WeightKind none() { return {}; }
  static WeightKind left_power(double alpha) {
    return {Type::left_power, alpha};
  }
  static WeightKind right_power(double alpha) {
    return {Type::right_power, alpha};
  }
  static WeightKind sqrt_left() { return {Type::sqrt_left, 0.5}; }
  static WeightKind sqrt_right() { return {Type::sqrt_right, 0.5}; }
};

struct QuadResult {
  double value = 0.0;
  double est_abs_error = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Raised when the integrand returns NaN/Inf; carries the offending abscissa
// in the original (untransformed) variable.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(double abscissa, const std::string& message)
      : std::runtime_error(message), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

using Integrand = std::function<double(double)>;

// Integrate f against `weight` over [lo, hi].  Deterministic: identical inputs
// produce bit-identical results.  est_abs_error accumulates the per-panel
// bisection discrepancies; converged is false iff the panel budget was
// exhausted before the local tolerances were met everywhere.
QuadResult integrate(const Integrand& f, double lo, double hi,
                     const WeightKind& weight = WeightKind::none(),
                     const QuadratureConfig& cfg = {});

// Left fractional integral of order alpha > 0 evaluated at x >= a:
//   (1 / Gamma(alpha)) * integral_a^x (x - t)^(alpha - 1) f(t) dt
QuadResult rl_left(const Integrand& f, double a, double x, double alpha,
                   const QuadratureConfig& cfg = {});

// Right fractional integral of order alpha > 0 evaluated at x <= b:
//   (1 / Gamma(alpha)) * integral_x^b (t - x)^(alpha - 1) f(t) dt
QuadResult rl_right(const Integrand& f, double x, double b, double alpha,
                    const QuadratureConfig& cfg = {});

}  // namespace fracineq::quad
