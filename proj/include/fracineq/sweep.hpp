#pragma once
// Deterministic sweep drivers: identity verification, theorem-bound
// verification with certification gating, and randomized falsification.

#include <cstdint>
#include <string>
#include <vector>

#include "fracineq/bounds.hpp"
#include "fracineq/config.hpp"
#include "fracineq/identities.hpp"
#include "fracineq/preinvex.hpp"
#include "fracineq/version.hpp"

namespace fracineq {

// pass  - assertion held
// flag  - a finding worth reading: uncertified/exploratory evaluation,
//         stated-vs-oracle inconsistency, failed certification, or an
//         informational reduction mismatch
// fail  - a pinned assertion was violated
// error - the evaluation could not run (missing derivative, domain problem)
enum class RowStatus { pass, flag, fail, error };
const char* to_string(RowStatus status);

// One result record.  `kind` selects which field group is meaningful:
// "identity", "bound", "certification", "reduction", "falsify_violation",
// "falsify_top".
struct ResultRow {
  std::string kind;
  RowStatus status = RowStatus::pass;
  std::string message;

  std::string fn;
  std::string map;
  double a = 0.0;
  double b = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
  double q = 0.0;

  int lemma = 0;                // identity rows: 1 or 2
  IdentityResidual identity{};  // identity rows

  BoundReport bound{};       // bound / falsify rows
  bool certified = false;    // bound / falsify rows
  std::string object;        // bound rows: certified object id

  CertificationReport cert{};  // certification rows (object set too)

  ReductionCheck reduction{};  // reduction rows

  double slack_ratio = 0.0;  // falsify rows: gap / oracle_bound
  long trial = -1;           // falsify rows
};

struct RunSummary {
  long rows = 0;
  long n_pass = 0;
  long n_flag = 0;
  long n_fail = 0;
  long n_error = 0;
  // falsify extras
  long trials = 0;
  long certified_evals = 0;
  long violations = 0;
  long equality_cases = 0;  // gap and oracle both numerically zero
};

struct RunReport {
  int schema_version = report_schema_version;
  std::string tool = "fracineq";
  std::string version = tool_version;
  std::string run_mode;  // "identities" | "theorems" | "falsify" | "certify"
  std::uint64_t seed = 0;
  std::vector<std::string> which;  // theorem labels covered (bound modes)
  SweepConfig config;
  std::vector<ResultRow> rows;
  RunSummary summary;
};

// Both identities on every instance of the config grid.  Missing derivatives
// become error rows; the run itself completes.
RunReport run_verify_identities(const SweepConfig& cfg);

// Selected theorem bounds (empty `which` = all six) on every instance, gated
// by envelope certification; adds certification rows for each distinct
// certified object and alpha=1 reduction cross-checks when the grid covers
// alpha = 1 with the identity map.
RunReport run_verify_theorems(const SweepConfig& cfg,
                              std::vector<std::string> which);

// Randomized search for bound violations among certified instances.
// Deterministic for a fixed (seed, trials) regardless of job count.
RunReport run_falsify(const SweepConfig& cfg, long trials, std::uint64_t seed);

// 0 when every row passed, 1 otherwise.
int exit_code_for(const RunReport& report);

}  // namespace fracineq
