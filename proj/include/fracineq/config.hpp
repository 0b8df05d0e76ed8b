#pragma once
// JSON run configuration: schema-versioned, strictly validated (unknown keys
// rejected, every diagnostic names the offending field path).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracineq/preinvex.hpp"
#include "fracineq/quadrature.hpp"

namespace fracineq {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cartesian block of instances: functions x maps x alphas x lambdas x qs on a
// fixed [a, b].
struct InstanceTemplate {
  std::vector<std::string> functions;
  std::vector<std::string> maps;
  double a = 0.0;
  double b = 1.0;
  std::vector<double> alphas;
  std::vector<double> lambdas;
  std::vector<double> qs;
};

// Randomized-search ranges.  b is drawn from [a + min_span, b_max].
struct FalsifyConfig {
  std::vector<std::string> functions;
  std::vector<std::string> maps;
  double a_min = 0.0;
  double a_max = 0.3;
  double min_span = 0.3;
  double b_max = 1.0;
  double alpha_min = 0.25;
  double alpha_max = 3.0;
  double lambda_min = 0.2;
  double lambda_max = 0.5;
  double q_min = 1.5;
  double q_max = 4.0;
  long trials = 10000;
  CertGrid grid{11, 11, 33, 1e-12};
};

struct SweepConfig {
  int schema_version = 1;
  quad::QuadratureConfig quadrature;
  CertGrid certification_grid;
  std::vector<InstanceTemplate> instances;
  FalsifyConfig falsify;
  std::uint64_t seed = 12345;
  int jobs = 0;  // 0 = pick from hardware
};

// The built-in default suite (same content as configs/default.json).
SweepConfig default_config();

// Parse/validate.  `origin` names the source (file path or "<inline>") in
// diagnostics.  Throws ConfigError.
SweepConfig parse_config(const std::string& json_text,
                         const std::string& origin);
SweepConfig load_config(const std::string& path);

// FRACINEQ_RTOL / FRACINEQ_ATOL / FRACINEQ_JOBS environment overrides
// (applied between file values and command-line flags).
void apply_env_overrides(SweepConfig& cfg);

// Normalized JSON echo of a parsed config (deterministic field order).
std::string config_to_json(const SweepConfig& cfg);

}  // namespace fracineq
