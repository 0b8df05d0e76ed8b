#include "fracineq/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fracineq {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json bound_to_json(const BoundReport& b, bool with_loose) {
  ordered_json j;
  j["theorem"] = b.theorem;
  j["mode"] = to_string(b.mode);
  j["gap"] = b.gap;
  j["stated_bound"] = b.stated_bound;
  j["oracle_bound"] = b.oracle_bound;
  if (with_loose && std::isfinite(b.oracle_bound_loose)) {
    j["oracle_bound_loose"] = b.oracle_bound_loose;
  }
  j["bound_holds_oracle"] = b.bound_holds_oracle;
  j["bound_holds_stated"] = b.bound_holds_stated;
  j["rel_diff"] = b.stated_vs_oracle_rel_diff;
  j["quad_error"] = b.quad_error;
  j["tolerance"] = b.tolerance;
  j["evaluations"] = b.evaluations;
  j["converged"] = b.converged;
  return j;
}

ordered_json row_to_json(const ResultRow& r) {
  ordered_json j;
  j["kind"] = r.kind;
  j["status"] = to_string(r.status);
  if (!r.fn.empty()) j["fn"] = r.fn;
  if (!r.map.empty()) j["map"] = r.map;

  if (r.kind == "identity") {
    j["a"] = r.a;
    j["b"] = r.b;
    j["alpha"] = r.alpha;
    j["lambda"] = r.lambda;
    j["q"] = r.q;
    j["lemma"] = r.lemma;
    j["lhs"] = r.identity.lhs;
    j["rhs"] = r.identity.rhs;
    j["residual"] = r.identity.residual;
    j["abs_residual"] = r.identity.abs_residual;
    j["quad_error"] = r.identity.combined_quadrature_error;
    j["evaluations"] = r.identity.evaluations;
    j["converged"] = r.identity.converged;
    j["passed"] = r.identity.passed;
  } else if (r.kind == "bound" || r.kind == "falsify_violation" ||
             r.kind == "falsify_top") {
    j["a"] = r.a;
    j["b"] = r.b;
    j["alpha"] = r.alpha;
    j["lambda"] = r.lambda;
    j["q"] = r.q;
    j.update(bound_to_json(r.bound, r.bound.theorem == "T1"));
    j["certified"] = r.certified;
    if (!r.object.empty()) j["object"] = r.object;
    if (r.trial >= 0) j["trial"] = r.trial;
    if (r.kind != "bound") j["slack_ratio"] = r.slack_ratio;
  } else if (r.kind == "certification") {
    j["a"] = r.a;
    j["b"] = r.b;
    j["lambda"] = r.lambda;
    j["object"] = r.object;
    if (r.status != RowStatus::error) {
      j["passed"] = r.cert.passed;
      j["max_violation"] = r.cert.max_violation;
      j["argmax_u"] = r.cert.argmax_u;
      j["argmax_v"] = r.cert.argmax_v;
      j["argmax_t"] = r.cert.argmax_t;
      j["grid_u"] = r.cert.grid_u;
      j["grid_v"] = r.cert.grid_v;
      j["grid_t"] = r.cert.grid_t;
      j["points"] = r.cert.points;
    }
  } else if (r.kind == "reduction") {
    j["a"] = r.a;
    j["b"] = r.b;
    j["alpha"] = r.alpha;
    j["lambda"] = r.lambda;
    j["q"] = r.q;
    j["theorem"] = r.reduction.theorem;
    j["id"] = r.reduction.id;
    if (r.status != RowStatus::error) {
      j["general_value"] = r.reduction.general_value;
      j["reduced_value"] = r.reduction.reduced_value;
      j["rel_diff"] = r.reduction.rel_diff;
      j["asserted"] = r.reduction.asserted;
      j["passed"] = r.reduction.passed;
    }
  }
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

std::string format_number(const ordered_json& v) {
  if (v.is_number_integer()) {
    return std::to_string(v.get<long long>());
  }
  if (v.is_number_unsigned()) {
    return std::to_string(v.get<unsigned long long>());
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

}  // namespace

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "kind",          "status",        "fn",
      "map",           "a",             "b",
      "alpha",         "lambda",        "q",
      "lemma",         "lhs",           "rhs",
      "residual",      "abs_residual",  "theorem",
      "mode",          "gap",           "stated_bound",
      "oracle_bound",  "oracle_bound_loose", "bound_holds_oracle",
      "bound_holds_stated", "rel_diff", "quad_error",
      "tolerance",     "evaluations",   "converged",
      "certified",     "object",        "passed",
      "max_violation", "argmax_u",      "argmax_v",
      "argmax_t",      "grid_u",        "grid_v",
      "grid_t",        "points",        "id",
      "general_value", "reduced_value", "asserted",
      "slack_ratio",   "trial",         "message",
  };
  return cols;
}

std::string report_to_json(const RunReport& report) {
  ordered_json doc;
  doc["schema_version"] = report.schema_version;
  doc["tool"] = report.tool;
  doc["version"] = report.version;
  doc["mode"] = report.run_mode;
  doc["seed"] = report.seed;
  doc["which"] = report.which;
  // jobs only affects scheduling, never results; keeping it out of the echo
  // makes reports byte-identical across worker counts.
  ordered_json cfg_echo = ordered_json::parse(config_to_json(report.config));
  cfg_echo.erase("jobs");
  doc["config"] = cfg_echo;
  ordered_json summary;
  summary["rows"] = report.summary.rows;
  summary["pass"] = report.summary.n_pass;
  summary["flag"] = report.summary.n_flag;
  summary["fail"] = report.summary.n_fail;
  summary["error"] = report.summary.n_error;
  if (report.run_mode == "falsify") {
    summary["trials"] = report.summary.trials;
    summary["certified_evals"] = report.summary.certified_evals;
    summary["violations"] = report.summary.violations;
    summary["equality_cases"] = report.summary.equality_cases;
  }
  doc["summary"] = summary;
  doc["rows"] = ordered_json::array();
  for (const auto& r : report.rows) doc["rows"].push_back(row_to_json(r));
  return doc.dump() + "\n";
}

std::string report_json_to_csv(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("report: JSON parse error: ") +
                             e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw std::runtime_error("report: input has no rows array");
  }
  const auto& cols = csv_columns();
  std::ostringstream out;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) out << ",";
    out << cols[i];
  }
  out << "\n";
  for (const auto& row : doc["rows"]) {
    for (size_t i = 0; i < cols.size(); ++i) {
      if (i) out << ",";
      if (!row.contains(cols[i])) continue;
      const auto& v = row.at(cols[i]);
      if (v.is_number()) {
        out << format_number(v);
      } else if (v.is_boolean()) {
        out << (v.get<bool>() ? "true" : "false");
      } else if (v.is_string()) {
        out << csv_escape(v.get<std::string>());
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open file for writing");
  out << content;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace fracineq
