#include "fracineq/preinvex.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace fracineq {

namespace {

void validate_grid(const CertGrid& grid) {
  if (grid.n_u < 2 || grid.n_v < 2 || grid.n_t < 1) {
    throw std::invalid_argument(
        "certification: grid needs n_u >= 2, n_v >= 2, n_t >= 1");
  }
  if (!(grid.tol >= 0.0)) {
    throw std::invalid_argument("certification: tol must be >= 0");
  }
}

double checked_value(const FunctionSpec& fn, double x) {
  const double y = fn.f(x);
  if (fn.nonneg && y < -1e-12) {
    throw std::domain_error("function '" + fn.id +
                            "' is declared nonnegative but f(" +
                            std::to_string(x) + ") = " + std::to_string(y));
  }
  return y;
}

// Shared sweep; coef_v / coef_u give the envelope weights as functions of t.
template <typename CoefV, typename CoefU>
CertificationReport sweep(const FunctionSpec& fn, const InvexityMap& map,
                          double lo, double hi, const CertGrid& grid,
                          CoefV coef_v, CoefU coef_u) {
  validate_grid(grid);
  if (!fn.f) throw std::invalid_argument("certification: function is not set");
  if (!fn.nonneg) {
    throw std::invalid_argument(
        "certification: function '" + fn.id +
        "' is not declared nonnegative; the envelope applies to nonnegative "
        "functions");
  }
  if (!(lo < hi)) throw std::invalid_argument("certification: requires lo < hi");

  const double dom_slack = 1e-12 * std::max(1.0, std::max(std::fabs(fn.domain_lo),
                                                          std::fabs(fn.domain_hi)));

  CertificationReport rep;
  rep.grid_u = grid.n_u;
  rep.grid_v = grid.n_v;
  rep.grid_t = grid.n_t;
  rep.max_violation = -std::numeric_limits<double>::infinity();

  std::vector<double> ts(grid.n_t), cv(grid.n_t), cu(grid.n_t);
  for (int j = 0; j < grid.n_t; ++j) {
    ts[j] = (double)(j + 1) / (double)(grid.n_t + 1);
    cv[j] = coef_v(ts[j]);
    cu[j] = coef_u(ts[j]);
  }

  for (int i = 0; i < grid.n_u; ++i) {
    const double u = lo + (hi - lo) * (double)i / (double)(grid.n_u - 1);
    const double fu = checked_value(fn, u);
    for (int k = 0; k < grid.n_v; ++k) {
      const double v = lo + (hi - lo) * (double)k / (double)(grid.n_v - 1);
      const double fv = checked_value(fn, v);
      const double eta = map.eta(v, u);
      for (int j = 0; j < grid.n_t; ++j) {
        const double t = ts[j];
        const double w = u + t * eta;
        if (w < fn.domain_lo - dom_slack || w > fn.domain_hi + dom_slack) {
          throw std::domain_error(
              "certification: evaluation point leaves the domain at u=" +
              std::to_string(u) + " v=" + std::to_string(v) +
              " t=" + std::to_string(t) + " (w=" + std::to_string(w) + ")");
        }
        const double fw = checked_value(fn, w);
        const double violation = fw - (cv[j] * fv + cu[j] * fu);
        ++rep.points;
        // strict > keeps the first (lexicographically smallest) argmax
        if (violation > rep.max_violation) {
          rep.max_violation = violation;
          rep.argmax_u = u;
          rep.argmax_v = v;
          rep.argmax_t = t;
        }
      }
    }
  }
  rep.passed = rep.max_violation <= grid.tol;
  return rep;
}

}  // namespace

CertificationReport certify_lambda_preinvex(const FunctionSpec& fn,
                                            const InvexityMap& map,
                                            double lambda, double lo, double hi,
                                            const CertGrid& grid) {
  if (!(lambda > 0.0 && lambda <= 0.5)) {
    throw std::invalid_argument(
        "certification: lambda must lie in (0, 1/2], got " +
        std::to_string(lambda));
  }
  const double ratio = (1.0 - lambda) / lambda;
  return sweep(
      fn, map, lo, hi, grid,
      [](double t) { return std::sqrt(t) / (2.0 * std::sqrt(1.0 - t)); },
      [ratio](double t) {
        return ratio * std::sqrt(1.0 - t) / (2.0 * std::sqrt(t));
      });
}

CertificationReport certify_mt(const FunctionSpec& fn, const InvexityMap& map,
                               double lo, double hi, const CertGrid& grid) {
  return sweep(
      fn, map, lo, hi, grid,
      [](double t) { return std::sqrt(t) / (2.0 * std::sqrt(1.0 - t)); },
      [](double t) { return std::sqrt(1.0 - t) / (2.0 * std::sqrt(t)); });
}

bool check_power_difference(double a1, double a2, double p) {
  if (!(a1 >= a2 && a2 >= 0.0)) {
    throw std::invalid_argument("check_power_difference: requires a1 >= a2 >= 0");
  }
  if (!(p >= 1.0)) {
    throw std::invalid_argument("check_power_difference: requires p >= 1");
  }
  const double lhs = std::pow(a1 - a2, p);
  const double rhs = std::pow(a1, p) - std::pow(a2, p);
  const double slack = 1e-12 * std::max(1.0, std::pow(a1, p));
  return lhs <= rhs + slack;
}

bool check_one_minus_t_bound(double t, double m) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("check_one_minus_t_bound: requires t in [0,1]");
  }
  if (!(m >= 1.0)) {
    throw std::invalid_argument("check_one_minus_t_bound: requires m >= 1");
  }
  const double lhs = 1.0 - std::pow(1.0 - t, m) - std::pow(t, m);
  const double rhs = 1.0 - std::pow(2.0, 1.0 - m);
  return lhs <= rhs + 1e-12;
}

}  // namespace fracineq
