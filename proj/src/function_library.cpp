#include "fracineq/function_library.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace fracineq {

namespace {

std::map<std::string, FunctionSpec> make_function_registry() {
  std::map<std::string, FunctionSpec> reg;

  FunctionSpec const1;
  const1.id = "const1";
  const1.f = [](double) { return 1.0; };
  const1.f_prime = [](double) { return 0.0; };
  const1.f_second = [](double) { return 0.0; };
  const1.nonneg = true;
  reg[const1.id] = const1;

  FunctionSpec square;
  square.id = "square";
  square.f = [](double x) { return x * x; };
  square.f_prime = [](double x) { return 2.0 * x; };
  square.f_second = [](double) { return 2.0; };
  square.nonneg = true;
  reg[square.id] = square;

  FunctionSpec expx;
  expx.id = "expx";
  expx.f = [](double x) { return std::exp(x); };
  expx.f_prime = [](double x) { return std::exp(x); };
  expx.f_second = [](double x) { return std::exp(x); };
  expx.nonneg = true;
  reg[expx.id] = expx;

  FunctionSpec shifted_square;
  shifted_square.id = "shifted_square";
  shifted_square.f = [](double x) { return (x - 0.3) * (x - 0.3); };
  shifted_square.f_prime = [](double x) { return 2.0 * (x - 0.3); };
  shifted_square.f_second = [](double) { return 2.0; };
  shifted_square.nonneg = true;
  reg[shifted_square.id] = shifted_square;

  FunctionSpec exp2x;
  exp2x.id = "exp2x";
  exp2x.f = [](double x) { return std::exp(2.0 * x); };
  exp2x.f_prime = [](double x) { return 2.0 * std::exp(2.0 * x); };
  exp2x.f_second = [](double x) { return 4.0 * std::exp(2.0 * x); };
  exp2x.nonneg = true;
  reg[exp2x.id] = exp2x;

  // x^(3/2): first derivative available, second omitted on purpose (it blows
  // up at 0); exercises the capability-error path of second-order evaluators.
  FunctionSpec pow32;
  pow32.id = "pow32";
  pow32.f = [](double x) { return std::pow(x, 1.5); };
  pow32.f_prime = [](double x) { return 1.5 * std::sqrt(x); };
  pow32.nonneg = true;
  reg[pow32.id] = pow32;

  return reg;
}

std::map<std::string, InvexityMap> make_map_registry() {
  std::map<std::string, InvexityMap> reg;
  reg["identity"] = {"identity", [](double v, double u) { return v - u; }};
  reg["scaled07"] = {"scaled07",
                     [](double v, double u) { return 0.7 * (v - u); }};
  return reg;
}

const std::map<std::string, FunctionSpec>& function_registry() {
  static const std::map<std::string, FunctionSpec> reg =
      make_function_registry();
  return reg;
}

const std::map<std::string, InvexityMap>& map_registry() {
  static const std::map<std::string, InvexityMap> reg = make_map_registry();
  return reg;
}

template <typename Registry>
std::string known_ids(const Registry& reg) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, _] : reg) {
    if (!first) os << ", ";
    os << id;
    first = false;
  }
  return os.str();
}

}  // namespace

const FunctionSpec& builtin_function(const std::string& id) {
  const auto& reg = function_registry();
  auto it = reg.find(id);
  if (it == reg.end()) {
    throw std::invalid_argument("unknown function id '" + id +
                                "'; known ids: " + known_ids(reg));
  }
  return it->second;
}

const InvexityMap& builtin_map(const std::string& id) {
  const auto& reg = map_registry();
  auto it = reg.find(id);
  if (it == reg.end()) {
    throw std::invalid_argument("unknown map id '" + id +
                                "'; known ids: " + known_ids(reg));
  }
  return it->second;
}

std::vector<std::string> builtin_function_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : function_registry()) ids.push_back(id);
  return ids;
}

std::vector<std::string> builtin_map_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : map_registry()) ids.push_back(id);
  return ids;
}

std::string derivative_magnitude_label(const std::string& fn_id, int order,
                                       double power) {
  std::ostringstream name;
  if (order == 0) {
    name << "abs(" << fn_id << ")";
  } else if (order == 1) {
    name << "abs_d1(" << fn_id << ")";
  } else {
    name << "abs_d2(" << fn_id << ")";
  }
  if (power != 1.0) name << "^" << power;
  return name.str();
}

FunctionSpec derivative_magnitude(const FunctionSpec& fn, int order,
                                  double power) {
  if (order < 0 || order > 2) {
    throw std::invalid_argument("derivative_magnitude: order must be 0, 1 or 2");
  }
  if (!(power >= 1.0)) {
    throw std::invalid_argument("derivative_magnitude: power must be >= 1");
  }
  std::function<double(double)> base;
  if (order == 0) {
    base = fn.f;
  } else if (order == 1) {
    if (!fn.has_first()) {
      throw CapabilityError("function '" + fn.id +
                            "' provides no first derivative");
    }
    base = fn.f_prime;
  } else {
    if (!fn.has_second()) {
      throw CapabilityError("function '" + fn.id +
                            "' provides no second derivative");
    }
    base = fn.f_second;
  }

  FunctionSpec out;
  out.id = derivative_magnitude_label(fn.id, order, power);
  out.domain_lo = fn.domain_lo;
  out.domain_hi = fn.domain_hi;
  out.nonneg = true;
  if (power == 1.0) {
    out.f = [base](double x) { return std::fabs(base(x)); };
  } else {
    out.f = [base, power](double x) {
      return std::pow(std::fabs(base(x)), power);
    };
  }
  return out;
}

DerivativeCheck check_derivative_consistency(const FunctionSpec& fn,
                                             int grid_points) {
  if (grid_points < 3) {
    throw std::invalid_argument("check_derivative_consistency: need >= 3 points");
  }
  DerivativeCheck out;
  const double lo = fn.domain_lo;
  const double hi = fn.domain_hi;
  const double span = hi - lo;
  // interior grid only: endpoint one-sided differences would need smaller h.
  // Steps balance truncation against roundoff (h ~ eps^(1/3) for the first
  // difference, eps^(1/4) for the second).
  for (int i = 1; i < grid_points - 1; ++i) {
    const double x = lo + span * (double)i / (double)(grid_points - 1);
    const double h1 = 6e-6 * std::max(1.0, std::fabs(x));
    const double h2 = 1.2e-4 * std::max(1.0, std::fabs(x));
    if (fn.has_first() && x - h1 > lo && x + h1 < hi) {
      const double fd = (fn.f(x + h1) - fn.f(x - h1)) / (2.0 * h1);
      out.max_abs_err_first =
          std::max(out.max_abs_err_first, std::fabs(fd - fn.f_prime(x)));
    }
    if (fn.has_second() && x - h2 > lo && x + h2 < hi) {
      const double fd =
          (fn.f(x + h2) - 2.0 * fn.f(x) + fn.f(x - h2)) / (h2 * h2);
      out.max_abs_err_second =
          std::max(out.max_abs_err_second, std::fabs(fd - fn.f_second(x)));
    }
  }
  return out;
}

double eta_of(const Instance& inst) { return inst.map.eta(inst.b, inst.a); }

void validate_instance(const Instance& inst) {
  if (!(inst.a < inst.b)) {
    throw std::invalid_argument("instance: requires a < b");
  }
  if (!(inst.alpha > 0.0)) {
    throw std::invalid_argument("instance: alpha must be positive");
  }
  if (!(inst.lambda > 0.0 && inst.lambda <= 0.5)) {
    throw std::invalid_argument("instance: lambda must lie in (0, 1/2]");
  }
  if (!inst.fn.f) {
    throw std::invalid_argument("instance: function is not set");
  }
  if (!inst.map.eta) {
    throw std::invalid_argument("instance: map is not set");
  }
  const double eta = eta_of(inst);
  if (!(eta > 0.0)) {
    throw std::invalid_argument("instance: eta(b, a) must be positive, got " +
                                std::to_string(eta));
  }
  const double seg_hi = inst.a + eta;
  const double slack = 1e-12 * std::max(1.0, std::fabs(seg_hi));
  if (inst.a < inst.fn.domain_lo - slack ||
      seg_hi > inst.fn.domain_hi + slack) {
    throw std::invalid_argument(
        "instance: segment [a, a + eta] leaves the function domain");
  }
}

}  // namespace fracineq
