#include "fracineq/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fracineq {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& origin, const std::string& path,
                       const std::string& what) {
  throw ConfigError(origin + ": " + path + ": " + what);
}

void reject_unknown_keys(const ordered_json& obj, const std::string& origin,
                         const std::string& path,
                         const std::set<std::string>& known) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) {
      std::ostringstream os;
      os << "unknown key '" << key << "'; known keys:";
      for (const auto& k : known) os << " " << k;
      fail(origin, path, os.str());
    }
  }
}

double get_number(const ordered_json& obj, const std::string& origin,
                  const std::string& path, const std::string& key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(origin, path + "." + key, "expected a number");
  return v.get<double>();
}

long get_integer(const ordered_json& obj, const std::string& origin,
                 const std::string& path, const std::string& key,
                 long fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) fail(origin, path + "." + key,
                                   "expected an integer");
  return v.get<long>();
}

std::vector<double> get_number_array(const ordered_json& obj,
                                     const std::string& origin,
                                     const std::string& path,
                                     const std::string& key) {
  if (!obj.contains(key)) {
    fail(origin, path, "missing required key '" + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_array() || v.empty()) {
    fail(origin, path + "." + key, "expected a non-empty array of numbers");
  }
  std::vector<double> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      fail(origin, path + "." + key + "[" + std::to_string(i) + "]",
           "expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

std::vector<std::string> get_string_array(const ordered_json& obj,
                                          const std::string& origin,
                                          const std::string& path,
                                          const std::string& key,
                                          bool required,
                                          std::vector<std::string> fallback) {
  if (!obj.contains(key)) {
    if (required) fail(origin, path, "missing required key '" + key + "'");
    return fallback;
  }
  const auto& v = obj.at(key);
  if (!v.is_array() || v.empty()) {
    fail(origin, path + "." + key, "expected a non-empty array of strings");
  }
  std::vector<std::string> out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      fail(origin, path + "." + key + "[" + std::to_string(i) + "]",
           "expected a string");
    }
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

void check_ids(const std::vector<std::string>& fns,
               const std::vector<std::string>& maps, const std::string& origin,
               const std::string& path) {
  for (size_t i = 0; i < fns.size(); ++i) {
    try {
      builtin_function(fns[i]);
    } catch (const std::invalid_argument& e) {
      fail(origin, path + ".functions[" + std::to_string(i) + "]", e.what());
    }
  }
  for (size_t i = 0; i < maps.size(); ++i) {
    try {
      builtin_map(maps[i]);
    } catch (const std::invalid_argument& e) {
      fail(origin, path + ".maps[" + std::to_string(i) + "]", e.what());
    }
  }
}

quad::QuadratureConfig parse_quadrature(const ordered_json& obj,
                                        const std::string& origin,
                                        const std::string& path) {
  reject_unknown_keys(obj, origin, path,
                      {"rel_tol", "abs_tol", "max_panels", "nodes_per_panel",
                       "singularity_policy"});
  quad::QuadratureConfig q;
  q.rel_tol = get_number(obj, origin, path, "rel_tol", q.rel_tol);
  q.abs_tol = get_number(obj, origin, path, "abs_tol", q.abs_tol);
  q.max_panels = (int)get_integer(obj, origin, path, "max_panels", q.max_panels);
  q.nodes_per_panel =
      (int)get_integer(obj, origin, path, "nodes_per_panel", q.nodes_per_panel);
  if (obj.contains("singularity_policy")) {
    const auto& v = obj.at("singularity_policy");
    if (!v.is_string()) {
      fail(origin, path + ".singularity_policy", "expected a string");
    }
    const std::string s = v.get<std::string>();
    if (s == "substitution") {
      q.singularity_policy = quad::SingularityPolicy::substitution;
    } else if (s == "panel_refinement") {
      q.singularity_policy = quad::SingularityPolicy::panel_refinement;
    } else {
      fail(origin, path + ".singularity_policy",
           "expected 'substitution' or 'panel_refinement', got '" + s + "'");
    }
  }
  if (!(q.rel_tol > 0.0)) fail(origin, path + ".rel_tol", "must be > 0");
  if (!(q.abs_tol >= 0.0)) fail(origin, path + ".abs_tol", "must be >= 0");
  if (q.max_panels < 1) fail(origin, path + ".max_panels", "must be >= 1");
  if (q.nodes_per_panel < 2 || q.nodes_per_panel > 64) {
    fail(origin, path + ".nodes_per_panel", "must lie in [2, 64]");
  }
  return q;
}

CertGrid parse_grid(const ordered_json& obj, const std::string& origin,
                    const std::string& path, CertGrid g) {
  reject_unknown_keys(obj, origin, path, {"n_u", "n_v", "n_t", "tol"});
  g.n_u = (int)get_integer(obj, origin, path, "n_u", g.n_u);
  g.n_v = (int)get_integer(obj, origin, path, "n_v", g.n_v);
  g.n_t = (int)get_integer(obj, origin, path, "n_t", g.n_t);
  g.tol = get_number(obj, origin, path, "tol", g.tol);
  if (g.n_u < 2) fail(origin, path + ".n_u", "must be >= 2");
  if (g.n_v < 2) fail(origin, path + ".n_v", "must be >= 2");
  if (g.n_t < 1) fail(origin, path + ".n_t", "must be >= 1");
  if (!(g.tol >= 0.0)) fail(origin, path + ".tol", "must be >= 0");
  return g;
}

InstanceTemplate parse_template(const ordered_json& obj,
                                const std::string& origin,
                                const std::string& path) {
  reject_unknown_keys(
      obj, origin, path,
      {"functions", "maps", "a", "b", "alphas", "lambdas", "qs"});
  InstanceTemplate t;
  t.functions = get_string_array(obj, origin, path, "functions", true, {});
  t.maps = get_string_array(obj, origin, path, "maps", true, {});
  check_ids(t.functions, t.maps, origin, path);
  t.a = get_number(obj, origin, path, "a", t.a);
  t.b = get_number(obj, origin, path, "b", t.b);
  if (!(t.a < t.b)) fail(origin, path, "requires a < b");
  t.alphas = get_number_array(obj, origin, path, "alphas");
  for (size_t i = 0; i < t.alphas.size(); ++i) {
    if (!(t.alphas[i] > 0.0)) {
      fail(origin, path + ".alphas[" + std::to_string(i) + "]", "must be > 0");
    }
  }
  t.lambdas = get_number_array(obj, origin, path, "lambdas");
  for (size_t i = 0; i < t.lambdas.size(); ++i) {
    if (!(t.lambdas[i] > 0.0 && t.lambdas[i] <= 0.5)) {
      fail(origin, path + ".lambdas[" + std::to_string(i) + "]",
           "must lie in (0, 1/2]");
    }
  }
  t.qs = get_number_array(obj, origin, path, "qs");
  for (size_t i = 0; i < t.qs.size(); ++i) {
    if (!(t.qs[i] >= 1.0)) {
      fail(origin, path + ".qs[" + std::to_string(i) + "]", "must be >= 1");
    }
  }
  return t;
}

FalsifyConfig parse_falsify(const ordered_json& obj, const std::string& origin,
                            const std::string& path, FalsifyConfig f) {
  reject_unknown_keys(obj, origin, path,
                      {"functions", "maps", "a_range", "min_span", "b_max",
                       "alpha_range", "lambda_range", "q_range", "trials",
                       "grid"});
  f.functions =
      get_string_array(obj, origin, path, "functions", false, f.functions);
  f.maps = get_string_array(obj, origin, path, "maps", false, f.maps);
  check_ids(f.functions, f.maps, origin, path);
  auto range = [&](const char* key, double& lo_out, double& hi_out) {
    if (!obj.contains(key)) return;
    const auto& v = obj.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
      fail(origin, path + "." + key, "expected [lo, hi]");
    }
    lo_out = v[0].get<double>();
    hi_out = v[1].get<double>();
    if (!(lo_out <= hi_out)) fail(origin, path + "." + key, "needs lo <= hi");
  };
  range("a_range", f.a_min, f.a_max);
  range("alpha_range", f.alpha_min, f.alpha_max);
  range("lambda_range", f.lambda_min, f.lambda_max);
  range("q_range", f.q_min, f.q_max);
  f.min_span = get_number(obj, origin, path, "min_span", f.min_span);
  f.b_max = get_number(obj, origin, path, "b_max", f.b_max);
  f.trials = get_integer(obj, origin, path, "trials", f.trials);
  if (obj.contains("grid")) {
    f.grid = parse_grid(obj.at("grid"), origin, path + ".grid", f.grid);
  }
  if (!(f.alpha_min > 0.0)) fail(origin, path + ".alpha_range", "needs lo > 0");
  if (!(f.lambda_min > 0.0 && f.lambda_max <= 0.5)) {
    fail(origin, path + ".lambda_range", "must lie inside (0, 1/2]");
  }
  if (!(f.q_min > 1.0)) {
    fail(origin, path + ".q_range", "needs lo > 1 (power-mean bounds)");
  }
  if (!(f.min_span > 0.0)) fail(origin, path + ".min_span", "must be > 0");
  if (!(f.a_max + f.min_span <= f.b_max)) {
    fail(origin, path, "a_range, min_span and b_max leave no room for b");
  }
  if (f.trials < 1) fail(origin, path + ".trials", "must be >= 1");
  return f;
}

}  // namespace

SweepConfig default_config() {
  SweepConfig cfg;
  InstanceTemplate t;
  t.functions = {"const1", "square", "expx", "shifted_square", "exp2x",
                 "pow32"};
  t.maps = {"identity", "scaled07"};
  t.a = 0.0;
  t.b = 1.0;
  t.alphas = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0};
  t.lambdas = {0.25, 0.4, 0.5};
  t.qs = {1.5, 2.0, 4.0};
  cfg.instances.push_back(t);
  cfg.falsify.functions = t.functions;
  cfg.falsify.maps = t.maps;
  return cfg;
}

SweepConfig parse_config(const std::string& json_text,
                         const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(origin + ": JSON parse error: " + e.what());
  }
  if (!doc.is_object()) fail(origin, "$", "top level must be an object");
  reject_unknown_keys(doc, origin, "$",
                      {"schema_version", "quadrature", "certification_grid",
                       "instances", "falsify", "seed", "jobs"});
  if (!doc.contains("schema_version")) {
    fail(origin, "$", "missing required key 'schema_version'");
  }
  SweepConfig cfg;
  const long sv = get_integer(doc, origin, "$", "schema_version", -1);
  if (sv != 1) {
    fail(origin, "$.schema_version",
         "unsupported value " + std::to_string(sv) + "; this build reads 1");
  }
  cfg.schema_version = (int)sv;
  if (doc.contains("quadrature")) {
    if (!doc.at("quadrature").is_object()) {
      fail(origin, "$.quadrature", "expected an object");
    }
    cfg.quadrature = parse_quadrature(doc.at("quadrature"), origin,
                                      "$.quadrature");
  }
  if (doc.contains("certification_grid")) {
    if (!doc.at("certification_grid").is_object()) {
      fail(origin, "$.certification_grid", "expected an object");
    }
    cfg.certification_grid = parse_grid(doc.at("certification_grid"), origin,
                                        "$.certification_grid",
                                        cfg.certification_grid);
  }
  if (!doc.contains("instances")) {
    fail(origin, "$", "missing required key 'instances'");
  }
  if (!doc.at("instances").is_array() || doc.at("instances").empty()) {
    fail(origin, "$.instances", "expected a non-empty array");
  }
  for (size_t i = 0; i < doc.at("instances").size(); ++i) {
    const auto& item = doc.at("instances")[i];
    const std::string path = "$.instances[" + std::to_string(i) + "]";
    if (!item.is_object()) fail(origin, path, "expected an object");
    cfg.instances.push_back(parse_template(item, origin, path));
  }
  if (doc.contains("falsify")) {
    if (!doc.at("falsify").is_object()) {
      fail(origin, "$.falsify", "expected an object");
    }
    cfg.falsify = parse_falsify(doc.at("falsify"), origin, "$.falsify",
                                cfg.falsify);
  } else {
    // fall back to the union of template functions/maps for random search
    for (const auto& t : cfg.instances) {
      for (const auto& f : t.functions) {
        if (std::find(cfg.falsify.functions.begin(),
                      cfg.falsify.functions.end(),
                      f) == cfg.falsify.functions.end()) {
          cfg.falsify.functions.push_back(f);
        }
      }
      for (const auto& m : t.maps) {
        if (std::find(cfg.falsify.maps.begin(), cfg.falsify.maps.end(), m) ==
            cfg.falsify.maps.end()) {
          cfg.falsify.maps.push_back(m);
        }
      }
    }
  }
  if (doc.contains("seed")) {
    const auto& v = doc.at("seed");
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      fail(origin, "$.seed", "expected a nonnegative integer");
    }
    cfg.seed = v.get<std::uint64_t>();
  }
  cfg.jobs = (int)get_integer(doc, origin, "$", "jobs", cfg.jobs);
  if (cfg.jobs < 0) fail(origin, "$.jobs", "must be >= 0");
  return cfg;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

void apply_env_overrides(SweepConfig& cfg) {
  auto read_double = [](const char* name, double& out) {
    const char* s = std::getenv(name);
    if (!s || !*s) return;
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0.0)) {
      throw ConfigError(std::string("environment ") + name +
                        ": expected a positive number, got '" + s + "'");
    }
    out = v;
  };
  read_double("FRACINEQ_RTOL", cfg.quadrature.rel_tol);
  read_double("FRACINEQ_ATOL", cfg.quadrature.abs_tol);
  const char* jobs = std::getenv("FRACINEQ_JOBS");
  if (jobs && *jobs) {
    char* end = nullptr;
    const long v = std::strtol(jobs, &end, 10);
    if (end == jobs || *end != '\0' || v < 0) {
      throw ConfigError(std::string("environment FRACINEQ_JOBS: expected a "
                                    "nonnegative integer, got '") +
                        jobs + "'");
    }
    cfg.jobs = (int)v;
  }
}

std::string config_to_json(const SweepConfig& cfg) {
  ordered_json doc;
  doc["schema_version"] = cfg.schema_version;
  doc["quadrature"] = {
      {"rel_tol", cfg.quadrature.rel_tol},
      {"abs_tol", cfg.quadrature.abs_tol},
      {"max_panels", cfg.quadrature.max_panels},
      {"nodes_per_panel", cfg.quadrature.nodes_per_panel},
      {"singularity_policy",
       cfg.quadrature.singularity_policy == quad::SingularityPolicy::substitution
           ? "substitution"
           : "panel_refinement"},
  };
  doc["certification_grid"] = {{"n_u", cfg.certification_grid.n_u},
                               {"n_v", cfg.certification_grid.n_v},
                               {"n_t", cfg.certification_grid.n_t},
                               {"tol", cfg.certification_grid.tol}};
  doc["instances"] = ordered_json::array();
  for (const auto& t : cfg.instances) {
    doc["instances"].push_back({{"functions", t.functions},
                                {"maps", t.maps},
                                {"a", t.a},
                                {"b", t.b},
                                {"alphas", t.alphas},
                                {"lambdas", t.lambdas},
                                {"qs", t.qs}});
  }
  doc["falsify"] = {
      {"functions", cfg.falsify.functions},
      {"maps", cfg.falsify.maps},
      {"a_range", {cfg.falsify.a_min, cfg.falsify.a_max}},
      {"min_span", cfg.falsify.min_span},
      {"b_max", cfg.falsify.b_max},
      {"alpha_range", {cfg.falsify.alpha_min, cfg.falsify.alpha_max}},
      {"lambda_range", {cfg.falsify.lambda_min, cfg.falsify.lambda_max}},
      {"q_range", {cfg.falsify.q_min, cfg.falsify.q_max}},
      {"trials", cfg.falsify.trials},
      {"grid",
       {{"n_u", cfg.falsify.grid.n_u},
        {"n_v", cfg.falsify.grid.n_v},
        {"n_t", cfg.falsify.grid.n_t},
        {"tol", cfg.falsify.grid.tol}}},
  };
  doc["seed"] = cfg.seed;
  doc["jobs"] = cfg.jobs;
  return doc.dump();
}

}  // namespace fracineq
