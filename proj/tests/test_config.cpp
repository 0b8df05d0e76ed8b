#include <cstdlib>
#include <string>

#include "doctest.h"
#include "fracineq/config.hpp"

using namespace fracineq;

#ifndef FRACINEQ_CONFIG_DIR
#error "FRACINEQ_CONFIG_DIR must be defined by the build"
#endif

namespace {

std::string expect_config_error(const std::string& json) {
  try {
    parse_config(json, "<inline>");
  } catch (const ConfigError& e) {
    return e.what();
  }
  FAIL("expected ConfigError");
  return {};
}

const char* kMinimal = R"({
  "schema_version": 1,
  "instances": [{
    "functions": ["square"],
    "maps": ["identity"],
    "alphas": [0.5],
    "lambdas": [0.5],
    "qs": [2.0]
  }]
})";

}  // namespace

TEST_CASE("the shipped default config round-trips to the built-in defaults") {
  const auto from_file =
      load_config(std::string(FRACINEQ_CONFIG_DIR) + "/default.json");
  const auto built_in = default_config();
  CHECK(config_to_json(from_file) == config_to_json(built_in));
}

TEST_CASE("minimal config parses with defaults filled in") {
  const auto cfg = parse_config(kMinimal, "<inline>");
  CHECK(cfg.schema_version == 1);
  CHECK(cfg.quadrature.rel_tol == 1e-10);
  CHECK(cfg.certification_grid.n_u == 21);
  REQUIRE(cfg.instances.size() == 1);
  CHECK(cfg.instances[0].functions == std::vector<std::string>{"square"});
  CHECK(cfg.instances[0].a == 0.0);
  CHECK(cfg.instances[0].b == 1.0);
  CHECK(cfg.seed == 12345);
  CHECK(cfg.jobs == 0);
  // Without an explicit falsify section the search reuses the template ids.
  CHECK(cfg.falsify.functions == std::vector<std::string>{"square"});
  CHECK(cfg.falsify.maps == std::vector<std::string>{"identity"});
  CHECK(cfg.falsify.trials == 10000);
}

TEST_CASE("unknown keys are rejected with their path") {
  auto msg = expect_config_error(R"({"schema_version": 1, "bogus": 3,
    "instances": [{"functions": ["square"], "maps": ["identity"],
                   "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("$") != std::string::npos);
  CHECK(msg.find("bogus") != std::string::npos);
  CHECK(msg.find("known keys") != std::string::npos);

  msg = expect_config_error(R"({"schema_version": 1,
    "quadrature": {"rel_tolerance": 1e-9},
    "instances": [{"functions": ["square"], "maps": ["identity"],
                   "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("$.quadrature") != std::string::npos);
  CHECK(msg.find("rel_tolerance") != std::string::npos);
}

TEST_CASE("schema version is mandatory and must match") {
  auto msg = expect_config_error(R"({"instances": []})");
  CHECK(msg.find("schema_version") != std::string::npos);

  msg = expect_config_error(R"({"schema_version": 2, "instances": [
    {"functions": ["square"], "maps": ["identity"],
     "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("$.schema_version") != std::string::npos);
  CHECK(msg.find("this build reads 1") != std::string::npos);
}

TEST_CASE("value range violations name the offending element") {
  auto msg = expect_config_error(R"({"schema_version": 1, "instances": [
    {"functions": ["square"], "maps": ["identity"],
     "alphas": [0.5, -1.0], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("alphas[1]") != std::string::npos);
  CHECK(msg.find("must be > 0") != std::string::npos);

  msg = expect_config_error(R"({"schema_version": 1, "instances": [
    {"functions": ["square"], "maps": ["identity"],
     "alphas": [1], "lambdas": [0.75], "qs": [2]}]})");
  CHECK(msg.find("lambdas[0]") != std::string::npos);

  msg = expect_config_error(R"({"schema_version": 1, "instances": [
    {"functions": ["square"], "maps": ["identity"],
     "alphas": [1], "lambdas": [0.5], "qs": [0.5]}]})");
  CHECK(msg.find("qs[0]") != std::string::npos);

  msg = expect_config_error(R"({"schema_version": 1, "instances": [
    {"functions": ["square"], "maps": ["identity"], "a": 1.0, "b": 0.5,
     "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("a < b") != std::string::npos);
}

TEST_CASE("unknown function and map ids are reported in context") {
  auto msg = expect_config_error(R"({"schema_version": 1, "instances": [
    {"functions": ["mystery"], "maps": ["identity"],
     "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("$.instances[0].functions[0]") != std::string::npos);
  CHECK(msg.find("mystery") != std::string::npos);
  CHECK(msg.find("square") != std::string::npos);  // the list of known ids
}

TEST_CASE("instances are required and must be non-empty") {
  auto msg = expect_config_error(R"({"schema_version": 1})");
  CHECK(msg.find("instances") != std::string::npos);
  msg = expect_config_error(R"({"schema_version": 1, "instances": []})");
  CHECK(msg.find("non-empty") != std::string::npos);
}

TEST_CASE("falsify section validates its ranges") {
  auto msg = expect_config_error(R"({"schema_version": 1,
    "falsify": {"q_range": [1.0, 4.0]},
    "instances": [{"functions": ["square"], "maps": ["identity"],
                   "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("$.falsify.q_range") != std::string::npos);

  msg = expect_config_error(R"({"schema_version": 1,
    "falsify": {"lambda_range": [0.2, 0.9]},
    "instances": [{"functions": ["square"], "maps": ["identity"],
                   "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("lambda_range") != std::string::npos);

  msg = expect_config_error(R"({"schema_version": 1,
    "falsify": {"a_range": [0.0, 0.9], "min_span": 0.3, "b_max": 1.0},
    "instances": [{"functions": ["square"], "maps": ["identity"],
                   "alphas": [1], "lambdas": [0.5], "qs": [2]}]})");
  CHECK(msg.find("no room") != std::string::npos);
}

TEST_CASE("malformed JSON is wrapped in a ConfigError") {
  const auto msg = expect_config_error("{not json");
  CHECK(msg.find("parse error") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/path.json"), ConfigError);
}

TEST_CASE("environment overrides apply and validate") {
  auto cfg = parse_config(kMinimal, "<inline>");

  setenv("FRACINEQ_RTOL", "1e-8", 1);
  setenv("FRACINEQ_JOBS", "3", 1);
  unsetenv("FRACINEQ_ATOL");
  apply_env_overrides(cfg);
  CHECK(cfg.quadrature.rel_tol == 1e-8);
  CHECK(cfg.jobs == 3);

  setenv("FRACINEQ_RTOL", "garbage", 1);
  CHECK_THROWS_AS(apply_env_overrides(cfg), ConfigError);
  setenv("FRACINEQ_RTOL", "-1e-9", 1);
  CHECK_THROWS_AS(apply_env_overrides(cfg), ConfigError);
  unsetenv("FRACINEQ_RTOL");

  setenv("FRACINEQ_JOBS", "-2", 1);
  CHECK_THROWS_AS(apply_env_overrides(cfg), ConfigError);
  unsetenv("FRACINEQ_JOBS");
}

TEST_CASE("config echo is deterministic") {
  const auto cfg = parse_config(kMinimal, "<inline>");
  CHECK(config_to_json(cfg) == config_to_json(cfg));
}
