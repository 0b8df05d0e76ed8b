#include "fracineq/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>

namespace fracineq {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  if (hc == 0) hc = 4;
  return (int)std::min(hc, 16u);
}

// Index-dispatched worker pool; results must be written to per-index slots so
// the output order never depends on scheduling.
void parallel_for(long n, int jobs, const std::function<void(long)>& body) {
  if (n <= 0) return;
  jobs = (int)std::min<long>(resolve_jobs(jobs), n);
  if (jobs <= 1) {
    for (long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&] {
      for (;;) {
        const long i = next.fetch_add(1);
        if (i >= n) return;
        body(i);
      }
    });
  }
  for (auto& w : workers) w.join();
}

struct InstanceParams {
  std::string fn;
  std::string map;
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double q = 0.0;

  auto tie() const { return std::tie(fn, map, a, b, alpha, lambda, q); }
  bool operator<(const InstanceParams& o) const { return tie() < o.tie(); }
  bool operator==(const InstanceParams& o) const { return tie() == o.tie(); }
};

std::vector<InstanceParams> expand_instances(const SweepConfig& cfg) {
  std::vector<InstanceParams> out;
  for (const auto& t : cfg.instances) {
    for (const auto& fn : t.functions) {
      for (const auto& map : t.maps) {
        for (double alpha : t.alphas) {
          for (double lambda : t.lambdas) {
            for (double q : t.qs) {
              out.push_back({fn, map, t.a, t.b, alpha, lambda, q});
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Instance materialize(const InstanceParams& p) {
  Instance inst;
  inst.a = p.a;
  inst.b = p.b;
  inst.alpha = p.alpha;
  inst.lambda = p.lambda;
  inst.q = p.q;
  inst.fn = builtin_function(p.fn);
  inst.map = builtin_map(p.map);
  return inst;
}

void echo_instance(ResultRow& row, const InstanceParams& p) {
  row.fn = p.fn;
  row.map = p.map;
  row.a = p.a;
  row.b = p.b;
  row.alpha = p.alpha;
  row.lambda = p.lambda;
  row.q = p.q;
}

// ---- certification table -------------------------------------------------

struct CertKey {
  std::string fn;
  std::string map;
  double a = 0.0;
  double b = 0.0;
  double lambda = 0.0;
  int order = 0;
  double power = 1.0;

  auto tie() const { return std::tie(fn, map, a, b, lambda, order, power); }
  bool operator<(const CertKey& o) const { return tie() < o.tie(); }
};

struct CertEntry {
  bool ok = false;  // certification ran (passed or not)
  std::string error;
  std::string object;
  CertificationReport rep{};
  CertKey key{};
};

CertEntry compute_cert(const CertKey& k, const CertGrid& grid) {
  CertEntry e;
  e.key = k;
  e.object = derivative_magnitude_label(k.fn, k.order, k.power);
  try {
    const FunctionSpec derived =
        derivative_magnitude(builtin_function(k.fn), k.order, k.power);
    e.rep = certify_lambda_preinvex(derived, builtin_map(k.map), k.lambda,
                                    k.a, k.b, grid);
    e.ok = true;
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  return e;
}

// (order, power) of the object each theorem certifies.
std::pair<int, double> cert_object_for(const std::string& th, double q) {
  if (th == "T1") return {1, 1.0};
  if (th == "T2" || th == "T3") return {1, q};
  if (th == "T4") return {2, 1.0};
  return {2, q};  // T5, T6
}

std::vector<std::string> normalize_which(std::vector<std::string> which) {
  const std::vector<std::string> all = {"T1", "T2", "T3", "T4", "T5", "T6"};
  if (which.empty()) return all;
  std::sort(which.begin(), which.end());
  which.erase(std::unique(which.begin(), which.end()), which.end());
  for (const auto& w : which) {
    if (std::find(all.begin(), all.end(), w) == all.end()) {
      throw std::invalid_argument("unknown theorem label '" + w +
                                  "'; expected labels among T1..T6");
    }
  }
  return which;
}

void tally(RunSummary& s, const std::vector<ResultRow>& rows) {
  s.rows = (long)rows.size();
  for (const auto& r : rows) {
    switch (r.status) {
      case RowStatus::pass: ++s.n_pass; break;
      case RowStatus::flag: ++s.n_flag; break;
      case RowStatus::fail: ++s.n_fail; break;
      case RowStatus::error: ++s.n_error; break;
    }
  }
}

ResultRow make_bound_row(const InstanceParams& p, const std::string& th,
                         BoundMode mode, const quad::QuadratureConfig& qcfg,
                         const CertEntry* cert) {
  ResultRow row;
  row.kind = "bound";
  echo_instance(row, p);
  if (cert) row.object = cert->object;
  try {
    row.bound = theorem_bounds(th, materialize(p), qcfg, mode);
  } catch (const std::exception& ex) {
    row.bound.theorem = th;
    row.bound.mode = mode;
    row.status = RowStatus::error;
    row.message = ex.what();
    return row;
  }
  row.certified = cert && cert->ok && cert->rep.passed;
  if (!row.certified) {
    row.status = RowStatus::flag;
    if (cert && !cert->error.empty()) {
      row.message = "exploratory: certification unavailable (" + cert->error +
                    ")";
    } else {
      row.message = "exploratory: envelope certification failed for " +
                    row.object;
    }
  } else if (!row.bound.bound_holds_oracle) {
    row.status = RowStatus::fail;
    row.message = "gap exceeds the oracle bound";
  } else if (row.bound.stated_bound + row.bound.tolerance <
                 row.bound.oracle_bound ||
             !row.bound.bound_holds_stated) {
    row.status = RowStatus::flag;
    row.message = "stated bound inconsistent with the oracle chain";
  } else if (!row.bound.converged) {
    row.status = RowStatus::flag;
    row.message = "quadrature convergence not reached";
  }
  return row;
}

// ---- randomized search ---------------------------------------------------

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double uniform01(std::mt19937_64& g) {
  // top 53 bits -> [0, 1)
  return (double)(g() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

}  // namespace

const char* to_string(RowStatus status) {
  switch (status) {
    case RowStatus::pass: return "pass";
    case RowStatus::flag: return "flag";
    case RowStatus::fail: return "fail";
    case RowStatus::error: return "error";
  }
  return "unknown";
}

RunReport run_verify_identities(const SweepConfig& cfg) {
  RunReport report;
  report.run_mode = "identities";
  report.seed = cfg.seed;
  report.config = cfg;

  const std::vector<InstanceParams> instances = expand_instances(cfg);
  std::vector<std::vector<ResultRow>> slots(instances.size());

  parallel_for((long)instances.size(), cfg.jobs, [&](long i) {
    const InstanceParams& p = instances[i];
    for (int lemma = 1; lemma <= 2; ++lemma) {
      ResultRow row;
      row.kind = "identity";
      row.lemma = lemma;
      echo_instance(row, p);
      try {
        const Instance inst = materialize(p);
        row.identity = (lemma == 1) ? lemma1_residual(inst, cfg.quadrature)
                                    : lemma2_residual(inst, cfg.quadrature);
        if (!row.identity.passed) {
          row.status = RowStatus::fail;
          row.message = "identity residual exceeds tolerance";
        } else if (!row.identity.converged) {
          row.status = RowStatus::flag;
          row.message = "quadrature convergence not reached";
        }
      } catch (const std::exception& ex) {
        row.status = RowStatus::error;
        row.message = ex.what();
      }
      slots[i].push_back(std::move(row));
    }
  });

  for (auto& group : slots) {
    for (auto& row : group) report.rows.push_back(std::move(row));
  }
  tally(report.summary, report.rows);
  return report;
}

RunReport run_verify_theorems(const SweepConfig& cfg,
                              std::vector<std::string> which) {
  RunReport report;
  report.run_mode = "theorems";
  report.seed = cfg.seed;
  report.config = cfg;
  report.which = normalize_which(std::move(which));

  const std::vector<InstanceParams> instances = expand_instances(cfg);

  // Phase A: distinct certification tasks, computed once each.
  std::set<CertKey> keyset;
  for (const auto& p : instances) {
    for (const auto& th : report.which) {
      const auto [order, power] = cert_object_for(th, p.q);
      keyset.insert({p.fn, p.map, p.a, p.b, p.lambda, order, power});
    }
  }
  const std::vector<CertKey> keys(keyset.begin(), keyset.end());
  std::vector<CertEntry> entries(keys.size());
  parallel_for((long)keys.size(), cfg.jobs, [&](long i) {
    entries[i] = compute_cert(keys[i], cfg.certification_grid);
  });
  std::map<CertKey, const CertEntry*> cert_table;
  for (const auto& e : entries) cert_table[e.key] = &e;

  // Certification rows, in key order.
  for (const auto& e : entries) {
    ResultRow row;
    row.kind = "certification";
    row.fn = e.key.fn;
    row.map = e.key.map;
    row.a = e.key.a;
    row.b = e.key.b;
    row.lambda = e.key.lambda;
    row.object = e.object;
    if (!e.ok) {
      row.status = RowStatus::error;
      row.message = e.error;
    } else {
      row.cert = e.rep;
      if (!e.rep.passed) {
        row.status = RowStatus::flag;
        row.message = "envelope certification failed";
      }
    }
    report.rows.push_back(std::move(row));
  }

  // Phase B: bound rows per instance.
  std::vector<std::vector<ResultRow>> slots(instances.size());
  parallel_for((long)instances.size(), cfg.jobs, [&](long i) {
    const InstanceParams& p = instances[i];
    for (const auto& th : report.which) {
      const auto [order, power] = cert_object_for(th, p.q);
      const CertKey key{p.fn, p.map, p.a, p.b, p.lambda, order, power};
      const auto it = cert_table.find(key);
      const CertEntry* cert = it == cert_table.end() ? nullptr : it->second;
      slots[i].push_back(
          make_bound_row(p, th, BoundMode::as_stated, cfg.quadrature, cert));
      if (has_dual_modes(th)) {
        slots[i].push_back(make_bound_row(p, th, BoundMode::proof_consistent,
                                          cfg.quadrature, cert));
      }
    }
  });
  for (auto& group : slots) {
    for (auto& row : group) report.rows.push_back(std::move(row));
  }

  // Reduction cross-checks at alpha = 1 with the identity map, evaluated on a
  // fixed canonical function so the formula transcription is checked once per
  // (a, b, lambda, q) block.
  std::set<std::tuple<double, double, double, double>> reduction_blocks;
  for (const auto& p : instances) {
    if (p.map == "identity" && p.alpha == 1.0) {
      reduction_blocks.insert({p.a, p.b, p.lambda, p.q});
    }
  }
  for (const auto& [a, b, lambda, q] : reduction_blocks) {
    for (const auto& th : report.which) {
      Instance inst;
      inst.a = a;
      inst.b = b;
      inst.alpha = 1.0;
      inst.lambda = lambda;
      inst.q = q;
      inst.fn = builtin_function("expx");
      inst.map = builtin_map("identity");
      try {
        for (const auto& check : alpha_one_reduction_check(th, inst)) {
          ResultRow row;
          row.kind = "reduction";
          row.fn = inst.fn.id;
          row.map = inst.map.id;
          row.a = a;
          row.b = b;
          row.alpha = 1.0;
          row.lambda = lambda;
          row.q = q;
          row.reduction = check;
          if (check.asserted) {
            if (!check.passed) {
              row.status = RowStatus::fail;
              row.message = "asserted reduction mismatch";
            }
          } else {
            row.status = RowStatus::flag;
            row.message = "informational reduction discrepancy recorded";
          }
          report.rows.push_back(std::move(row));
        }
      } catch (const std::exception& ex) {
        ResultRow row;
        row.kind = "reduction";
        row.fn = "expx";
        row.map = "identity";
        row.a = a;
        row.b = b;
        row.alpha = 1.0;
        row.lambda = lambda;
        row.q = q;
        row.reduction.theorem = th;
        row.status = RowStatus::error;
        row.message = ex.what();
        report.rows.push_back(std::move(row));
      }
    }
  }

  tally(report.summary, report.rows);
  return report;
}

RunReport run_falsify(const SweepConfig& cfg, long trials,
                      std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("falsify: trials must be >= 1");
  RunReport report;
  report.run_mode = "falsify";
  report.seed = seed;
  report.config = cfg;
  report.which = normalize_which({});

  const FalsifyConfig& fc = cfg.falsify;
  if (fc.functions.empty() || fc.maps.empty()) {
    throw std::invalid_argument("falsify: needs at least one function and map");
  }

  struct Candidate {
    double ratio = 0.0;
    long trial = -1;
    std::string theorem;
    InstanceParams p{};
    BoundReport rep{};
  };
  struct TrialOut {
    std::vector<ResultRow> violations;
    std::vector<Candidate> candidates;
    long certified_evals = 0;
    long equality_cases = 0;
    std::vector<ResultRow> errors;
  };
  std::vector<TrialOut> slots(trials);

  parallel_for(trials, cfg.jobs, [&](long i) {
    TrialOut& out = slots[i];
    std::mt19937_64 rng(splitmix64(seed + (std::uint64_t)i));
    InstanceParams p;
    p.fn = fc.functions[(size_t)(rng() % fc.functions.size())];
    p.map = fc.maps[(size_t)(rng() % fc.maps.size())];
    p.a = uniform_in(rng, fc.a_min, fc.a_max);
    p.b = uniform_in(rng, p.a + fc.min_span, fc.b_max);
    p.alpha = uniform_in(rng, fc.alpha_min, fc.alpha_max);
    p.lambda = uniform_in(rng, fc.lambda_min, fc.lambda_max);
    p.q = uniform_in(rng, fc.q_min, fc.q_max);

    // one certification per derived object, shared across theorems
    std::map<std::pair<int, double>, CertEntry> certs;
    for (const auto& th : report.which) {
      const auto op = cert_object_for(th, p.q);
      if (!certs.count(op)) {
        certs[op] = compute_cert(
            {p.fn, p.map, p.a, p.b, p.lambda, op.first, op.second}, fc.grid);
      }
    }

    for (const auto& th : report.which) {
      const CertEntry& cert = certs[cert_object_for(th, p.q)];
      if (!cert.ok || !cert.rep.passed) continue;  // only certified asserts
      BoundReport rep;
      try {
        rep = theorem_bounds(th, materialize(p), cfg.quadrature);
      } catch (const std::exception& ex) {
        ResultRow row;
        row.kind = "falsify_violation";
        echo_instance(row, p);
        row.bound.theorem = th;
        row.trial = i;
        row.status = RowStatus::error;
        row.message = ex.what();
        out.errors.push_back(std::move(row));
        continue;
      }
      ++out.certified_evals;
      if (rep.gap > rep.oracle_bound + rep.tolerance) {
        ResultRow row;
        row.kind = "falsify_violation";
        echo_instance(row, p);
        row.bound = rep;
        row.certified = true;
        row.object = cert.object;
        row.trial = i;
        row.slack_ratio =
            rep.oracle_bound > 0.0 ? rep.gap / rep.oracle_bound : 0.0;
        row.status = RowStatus::fail;
        row.message = "certified instance violates the oracle bound";
        out.violations.push_back(std::move(row));
      } else if (rep.gap <= rep.tolerance &&
                 rep.oracle_bound <= rep.tolerance) {
        ++out.equality_cases;  // 0/0 class: both sides are numerical zeros
      } else if (rep.oracle_bound > rep.tolerance) {
        Candidate c;
        c.ratio = rep.gap / rep.oracle_bound;
        c.trial = i;
        c.theorem = th;
        c.p = p;
        c.rep = rep;
        out.candidates.push_back(std::move(c));
      }
    }
  });

  std::vector<Candidate> all;
  for (auto& s : slots) {
    for (auto& row : s.errors) report.rows.push_back(std::move(row));
    for (auto& row : s.violations) report.rows.push_back(std::move(row));
    for (auto& c : s.candidates) all.push_back(std::move(c));
    report.summary.certified_evals += s.certified_evals;
    report.summary.equality_cases += s.equality_cases;
    report.summary.violations += (long)s.violations.size();
  }
  report.summary.trials = trials;

  // top ten tightest certified ratios, ties broken by trial then label
  std::sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
    if (x.ratio != y.ratio) return x.ratio > y.ratio;
    if (x.trial != y.trial) return x.trial < y.trial;
    return x.theorem < y.theorem;
  });
  const size_t keep = std::min<size_t>(10, all.size());
  for (size_t i = 0; i < keep; ++i) {
    const Candidate& c = all[i];
    ResultRow row;
    row.kind = "falsify_top";
    echo_instance(row, c.p);
    row.bound = c.rep;
    row.certified = true;
    row.trial = c.trial;
    row.slack_ratio = c.ratio;
    report.rows.push_back(std::move(row));
  }

  tally(report.summary, report.rows);
  return report;
}

int exit_code_for(const RunReport& report) {
  const RunSummary& s = report.summary;
  return (s.n_flag + s.n_fail + s.n_error) > 0 ? 1 : 0;
}

}  // namespace fracineq
