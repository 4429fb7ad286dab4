#ifndef SUBMAX_HARNESS_HPP
#define SUBMAX_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "submax/config.hpp"
#include "submax/set_function.hpp"
#include "submax/trace.hpp"

namespace submax {

// Fill the regret fields of a trace from its recorded true values:
// inst_t = 0.5 * astar_value - f(A_t), cumulative prefix sums, and the
// streaming aggregates (final_regret, exploit_regret_mean). Regret uses true
// values, never observations; it may be negative.
void compute_regret(RegretTrace& trace, double astar_value);

// Spec-level convenience: build a trace from a played action sequence.
RegretTrace compute_regret(const std::vector<ItemSet>& actions,
                           const SetFunction& f, double astar_value);

struct ReplicationSummary {
  int replication = 0;
  double final_regret = 0.0;
  std::int64_t exploration_rounds = 0;
  bool truncated = false;
  std::vector<CommitRecord> commits;
};

struct RunSummary {
  std::vector<ReplicationSummary> replications;
  double mean_regret = 0.0;
  double std_regret = 0.0;
  double q10_regret = 0.0;
  double median_regret = 0.0;
  double q90_regret = 0.0;
  double min_regret = 0.0;
  double max_regret = 0.0;
  double mean_exploration_rounds = 0.0;
};

RunSummary summarize(const std::vector<ReplicationSummary>& replications);

struct RunOptions {
  int jobs = 1;
  bool record_rounds = true;
  bool persist_rounds = true;       // write per-replication trace files
  std::string output_dir;           // empty = no persistence
  std::string timestamp_override;   // empty = SUBMAX_TIMESTAMP env or clock
};

struct ExperimentResult {
  RunSummary summary;
  std::vector<RegretTrace> traces;  // index = replication (stream id)
  double astar_value = 0.0;
  double confidence = 0.0;   // g radius used by dgetc (0 otherwise)
  double gamma = 0.0;        // companion radius, for exploration bounds
};

// Runs `replications` independent (environment, algorithm) pairs on streams
// (seed, k); deterministic for a given config regardless of `jobs`.
// Replication k's stream splits into child(0) for the noise channel and
// child(1) for the algorithm. Persists traces/summary when output_dir is set.
ExperimentResult run_experiment(const ExperimentConfig& cfg,
                                const RunOptions& opts = {});

struct SweepRow {
  std::string config_id;
  std::string algorithm;
  std::int64_t T = 0;
  int replication = 0;
  double final_regret = 0.0;
  std::int64_t exploration_rounds = 0;
  bool truncated = false;
  std::string status = "ok";  // "error: ..." rows keep the sweep going
};

// Runs every cell, one long-format row per (cell, replication); failures are
// recorded per-cell without aborting the sweep.
std::vector<SweepRow> run_sweep(const std::vector<SweepCell>& grid,
                                const RunOptions& opts = {});

// --- persistence -----------------------------------------------------------

// ISO-8601 UTC now, unless the SUBMAX_TIMESTAMP environment variable (or the
// explicit override) pins it for byte-reproducible outputs.
std::string timestamp_string(const std::string& override_value = "");

// Shortest round-trippable decimal form of a double.
std::string fmt_double(double v);

void write_trace_file(const std::string& path, const RegretTrace& trace,
                      const ExperimentConfig& cfg, int replication,
                      const std::string& timestamp);
void write_summary_files(const std::string& dir, const RunSummary& summary,
                         const ExperimentConfig& cfg,
                         const std::string& timestamp);
void write_sweep_file(const std::string& path,
                      const std::vector<SweepRow>& rows,
                      const std::string& timestamp);

// Re-derives the cumulative regret from a persisted trace file; used to
// validate traces independently of the in-memory path.
double reread_trace_regret(const std::string& path);

}  // namespace submax

#endif
