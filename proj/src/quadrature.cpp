#include "fracineq/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "fracineq/specfun.hpp"

namespace fracineq::quad {

namespace {

struct NodeTable {
  std::vector<double> x;  // nodes on [-1, 1], ascending
  std::vector<double> w;
};

// Legendre nodes/weights by Newton iteration on P_n.  Tables are cached per
// node count; std::map never invalidates references to stored elements.
const NodeTable& gauss_table(int n) {
  static std::mutex mu;
  static std::map<int, NodeTable> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  NodeTable tab;
  tab.x.assign(n, 0.0);
  tab.w.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) {
        // one polishing step after convergence
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        x -= p1 / dp;
        break;
      }
    }
    tab.x[i] = -x;
    tab.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    tab.w[i] = w;
    tab.w[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(tab)).first->second;
}

void validate_config(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol >= 0.0)) {
    throw std::domain_error("quadrature: tolerances must be positive");
  }
  if (cfg.max_panels < 1) {
    throw std::domain_error("quadrature: max_panels must be >= 1");
  }
  if (cfg.nodes_per_panel < 2 || cfg.nodes_per_panel > 64) {
    throw std::domain_error("quadrature: nodes_per_panel must be in [2, 64]");
  }
}

// Transformed integrand: g acts on the integration box [lo, hi]; `origin`
// maps a transformed abscissa back to the user's variable for diagnostics.
struct Transformed {
  std::function<double(double)> g;
  double lo = 0.0;
  double hi = 0.0;
};

double checked_eval(const Integrand& f, double t) {
  const double y = f(t);
  if (!std::isfinite(y)) {
    throw EvaluationError(
        t, "quadrature: integrand returned a non-finite value at t = " +
               std::to_string(t));
  }
  return y;
}

Transformed build_transformed(const Integrand& f, double lo, double hi,
                              const WeightKind& weight,
                              SingularityPolicy policy) {
  const double h = hi - lo;
  using Type = WeightKind::Type;
  switch (weight.type) {
    case Type::none:
      return {[&f](double t) { return checked_eval(f, t); }, lo, hi};
    case Type::left_power: {
      const double a = weight.exponent;
      if (!(a > 0.0)) {
        throw std::domain_error("quadrature: power-weight exponent must be > 0");
      }
      if (a == 1.0) {
        return {[&f](double t) { return checked_eval(f, t); }, lo, hi};
      }
      if (policy == SingularityPolicy::substitution && a < 1.0) {
        // tau = (hi - t)^a  =>  integral becomes (1/a) * f(hi - tau^(1/a))
        const double inv_a = 1.0 / a;
        return {[&f, hi, a, inv_a](double tau) {
                  const double t = hi - std::pow(tau, inv_a);
                  return checked_eval(f, t) / a;
                },
                0.0, std::pow(h, a)};
      }
      return {[&f, hi, a](double t) {
                return std::pow(hi - t, a - 1.0) * checked_eval(f, t);
              },
              lo, hi};
    }
    case Type::right_power: {
      const double a = weight.exponent;
      if (!(a > 0.0)) {
        throw std::domain_error("quadrature: power-weight exponent must be > 0");
      }
      if (a == 1.0) {
        return {[&f](double t) { return checked_eval(f, t); }, lo, hi};
      }
      if (policy == SingularityPolicy::substitution && a < 1.0) {
        const double inv_a = 1.0 / a;
        return {[&f, lo, a, inv_a](double tau) {
                  const double t = lo + std::pow(tau, inv_a);
                  return checked_eval(f, t) / a;
                },
                0.0, std::pow(h, a)};
      }
      return {[&f, lo, a](double t) {
                return std::pow(t - lo, a - 1.0) * checked_eval(f, t);
              },
              lo, hi};
    }
    case Type::sqrt_left: {
      if (policy == SingularityPolicy::substitution) {
        // t = lo + h sin^2(theta):  w dt = 2 h sin^2(theta) dtheta
        return {[&f, lo, h](double th) {
                  const double s = std::sin(th);
                  const double t = lo + h * s * s;
                  return 2.0 * h * s * s * checked_eval(f, t);
                },
                0.0, std::numbers::pi / 2.0};
      }
      return {[&f, lo, h](double t) {
                const double s = (t - lo) / h;
                return std::sqrt(s / (1.0 - s)) * checked_eval(f, t);
              },
              lo, hi};
    }
    case Type::sqrt_right: {
      if (policy == SingularityPolicy::substitution) {
        return {[&f, lo, h](double th) {
                  const double s = std::sin(th);
                  const double c = std::cos(th);
                  const double t = lo + h * s * s;
                  return 2.0 * h * c * c * checked_eval(f, t);
                },
                0.0, std::numbers::pi / 2.0};
      }
      return {[&f, lo, h](double t) {
                const double s = (t - lo) / h;
                return std::sqrt((1.0 - s) / s) * checked_eval(f, t);
              },
              lo, hi};
    }
  }
  throw std::logic_error("quadrature: unreachable weight type");
}

double panel_sum(const std::function<double(double)>& g, double lo, double hi,
                 const NodeTable& tab, long& evals) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double s = 0.0;
  for (size_t i = 0; i < tab.x.size(); ++i) {
    s += tab.w[i] * g(mid + half * tab.x[i]);
  }
  evals += (long)tab.x.size();
  return s * half;
}

// Depth-first left-to-right bisection.  A panel is accepted when the
// coarse-vs-bisected discrepancy fits a width-proportional share of the
// tolerance budget; accumulation order is deterministic.
QuadResult adapt(const std::function<double(double)>& g, double lo, double hi,
                 const QuadratureConfig& cfg) {
  const NodeTable& tab = gauss_table(cfg.nodes_per_panel);
  const double width_total = hi - lo;

  long evals = 0;
  const double coarse_whole = panel_sum(g, lo, hi, tab, evals);
  const double scale_floor =
      std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(coarse_whole));

  struct Frame {
    double lo, hi, coarse;
  };
  std::vector<Frame> stack;
  stack.push_back({lo, hi, coarse_whole});

  double total = 0.0;
  double err_total = 0.0;
  int panels = 1;
  bool budget_hit = false;

  while (!stack.empty()) {
    const Frame fr = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (fr.lo + fr.hi);
    const double left = panel_sum(g, fr.lo, mid, tab, evals);
    const double right = panel_sum(g, mid, fr.hi, tab, evals);
    const double refined = left + right;
    const double local_err = std::fabs(refined - fr.coarse);
    const double width = fr.hi - fr.lo;

    const double budget =
        0.25 * std::max({scale_floor * width / width_total,
                         cfg.rel_tol * std::fabs(refined)});
    const bool width_floor =
        width <= 16.0 * std::numeric_limits<double>::epsilon() *
                     std::max({std::fabs(fr.lo), std::fabs(fr.hi), 1.0});
    if (local_err <= budget || width_floor || panels >= cfg.max_panels) {
      if (local_err > budget && !width_floor) budget_hit = true;
      total += refined;
      err_total += local_err;
      continue;
    }
    panels += 2;
    stack.push_back({mid, fr.hi, right});  // right processed after left
    stack.push_back({fr.lo, mid, left});
  }

  QuadResult res;
  res.value = total;
  res.est_abs_error =
      err_total + std::fabs(total) * 4.0 * std::numeric_limits<double>::epsilon();
  res.evaluations = evals;
  res.converged =
      !budget_hit &&
      res.est_abs_error <=
          std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total)) * 16.0;
  return res;
}

}  // namespace

QuadResult integrate(const Integrand& f, double lo, double hi,
                     const WeightKind& weight, const QuadratureConfig& cfg) {
  validate_config(cfg);
  if (!(lo <= hi)) {
    throw std::domain_error("quadrature: requires lo <= hi, got lo=" +
                            std::to_string(lo) + " hi=" + std::to_string(hi));
  }
  if (lo == hi) return {0.0, 0.0, 0, true};
  const Transformed tr =
      build_transformed(f, lo, hi, weight, cfg.singularity_policy);
  return adapt(tr.g, tr.lo, tr.hi, cfg);
}

QuadResult rl_left(const Integrand& f, double a, double x, double alpha,
                   const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("rl_left: order must be positive, got " +
                            std::to_string(alpha));
  }
  if (!(x >= a)) {
    throw std::domain_error("rl_left: requires x >= a");
  }
  QuadResult r = integrate(f, a, x, WeightKind::left_power(alpha), cfg);
  const double inv_gamma = 1.0 / specfun::gamma(alpha);
  r.value *= inv_gamma;
  r.est_abs_error *= inv_gamma;
  return r;
}

QuadResult rl_right(const Integrand& f, double x, double b, double alpha,
                    const QuadratureConfig& cfg) {
  if (!(alpha > 0.0)) {
    throw std::domain_error("rl_right: order must be positive, got " +
                            std::to_string(alpha));
  }
  if (!(b >= x)) {
    throw std::domain_error("rl_right: requires b >= x");
  }
  QuadResult r = integrate(f, x, b, WeightKind::right_power(alpha), cfg);
  const double inv_gamma = 1.0 / specfun::gamma(alpha);
  r.value *= inv_gamma;
  r.est_abs_error *= inv_gamma;
  return r;
}

}  // namespace fracineq::quad
