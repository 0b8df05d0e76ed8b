#pragma once
// Built-in test functions, direction maps, and the parameterized instance
// bundle consumed by the identity and bound evaluators.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracineq {

// Raised when an evaluator needs a derivative the function does not provide.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scalar function with optional analytic derivatives.  `nonneg` declares
// that f >= 0 on [domain_lo, domain_hi]; certification sweeps verify the
// claim as they go.
struct FunctionSpec {
  std::string id;
  std::function<double(double)> f;
  std::function<double(double)> f_prime;   // empty if unavailable
  std::function<double(double)> f_second;  // empty if unavailable
  double domain_lo = 0.0;
  double domain_hi = 1.0;
  bool nonneg = false;

  bool has_first() const { return (bool)f_prime; }
  bool has_second() const { return (bool)f_second; }
};

// Direction map eta(v, u) defining the comparison segment [u, u + eta(v, u)].
struct InvexityMap {
  std::string id;
  std::function<double(double, double)> eta;
};

// Registry ----------------------------------------------------------------

// Throws std::invalid_argument listing the known ids when `id` is unknown.
const FunctionSpec& builtin_function(const std::string& id);
const InvexityMap& builtin_map(const std::string& id);
std::vector<std::string> builtin_function_ids();
std::vector<std::string> builtin_map_ids();

// |f^(order)|^power as a new FunctionSpec (no derivatives of its own); the
// returned object is what certification sweeps operate on.  order in {0,1,2};
// power >= 1.  Throws CapabilityError when the requested derivative is absent.
FunctionSpec derivative_magnitude(const FunctionSpec& fn, int order,
                                  double power);

// The id derivative_magnitude would assign, without needing the derivative to
// exist (used for labeling rows about unavailable objects).
std::string derivative_magnitude_label(const std::string& fn_id, int order,
                                       double power);

// Max deviation between analytic derivatives and central differences over an
// interior grid; used to validate registry entries.
struct DerivativeCheck {
  double max_abs_err_first = 0.0;
  double max_abs_err_second = 0.0;
};
DerivativeCheck check_derivative_consistency(const FunctionSpec& fn,
                                             int grid_points = 101);

// Instance -----------------------------------------------------------------

struct Instance {
  double a = 0.0;
  double b = 1.0;
  double alpha = 1.0;   // fractional order, > 0
  double lambda = 0.5;  // shape parameter, in (0, 1/2]
  double q = 2.0;       // Holder exponent for the power-mean bounds, > 1
  FunctionSpec fn;
  InvexityMap map;
};

// eta evaluated across the instance interval: map.eta(b, a).
double eta_of(const Instance& inst);

// Validates ranges (a < b, alpha > 0, lambda in (0, 1/2], eta > 0, segment
// inside the function domain).  Throws std::invalid_argument naming the
// offending field.
void validate_instance(const Instance& inst);

}  // namespace fracineq
