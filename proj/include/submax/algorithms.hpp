#ifndef SUBMAX_ALGORITHMS_HPP
#define SUBMAX_ALGORITHMS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "submax/core_math.hpp"
#include "submax/environment.hpp"
#include "submax/item_set.hpp"
#include "submax/rng.hpp"
#include "submax/set_function.hpp"
#include "submax/trace.hpp"

namespace submax {

// Offline double greedy: one ascending sweep with exact evaluations, adding
// item i to X with probability a+/(a+ + b+) (1/2 when both parts vanish) and
// removing it from Y otherwise. Returns X_d (= Y_d).
ItemSet dg_offline(const SetFunction& f, RngStream rng);

// Best of `repeats` independent offline runs (substreams rng.child(k)),
// by exact value; ties keep the first occurrence.
std::pair<ItemSet, double> dg_repeated(const SetFunction& f, int repeats,
                                       RngStream rng);

// Prefix sampling: starting from (empty, full), draw K_j ~ Bernoulli(p[j])
// for j < next_item-1 (1-based next_item in [1, d+1]) to add j to X or drop
// it from Y. Returns (X, Y) with X subset of Y; the undecided items are
// exactly Y \ X. p values must be committed (finite, in [0,1]).
std::pair<ItemSet, ItemSet> dg_sample(std::span<const double> p, int next_item,
                                      RngStream& rng);

// Allocation-free variant used by the run loops; X/Y must have universe d.
void dg_sample_into(ItemSet& X, ItemSet& Y, std::span<const double> p,
                    int next_item, RngStream& rng);

// Per-item running estimates driving the explore-then-commit algorithms.
// Means use the exact incremental form (tau*mean + diff) / (tau + 1);
// a parameter can be committed at most once.
class EstimatorState {
 public:
  explicit EstimatorState(int d);

  int item_count() const { return d_; }
  double add_gain_hat(int i) const { return add_hat_[i]; }
  double remove_gain_hat(int i) const { return remove_hat_[i]; }
  std::int64_t tau(int i) const { return tau_[i]; }
  double p(int i) const { return p_[i]; }
  bool committed(int i) const { return committed_[i]; }
  std::span<const double> probabilities() const { return p_; }

  void observe_block(int i, double add_diff, double remove_diff);
  void commit(int i, double p);

 private:
  int d_;
  std::vector<double> add_hat_, remove_hat_;
  std::vector<std::int64_t> tau_;
  std::vector<double> p_;  // 1/2 until committed
  std::vector<bool> committed_;
};

// One exploration update: decide whether item `item` can commit now.
struct UpdExpResult {
  double p = 0.5;
  int next_item = 0;
  bool advanced = false;
  ExitBranch branch = ExitBranch::truncated;  // meaningful when advanced
};

// Commits through the feasible interval when it is non-empty (loss minimizer
// over it), through the default rule once tau reaches tau_max, and otherwise
// keeps exploring with p = 1/2.
UpdExpResult update_exploration(int item, double add_gain_hat,
                                double remove_gain_hat, std::int64_t tau,
                                double confidence, std::int64_t tau_cap);

struct DgEtcParams {
  double c = 1.0;
  double sigma = 0.1;
  double delta = 0.05;
  std::int64_t T = 1;
};

// Explore-then-commit over the double-greedy decomposition: per item, blocks
// of the four actions X, X u {i}, Y, Y \ {i} (in that order, with a fresh
// prefix sample each block) feed paired-difference estimates until
// update_exploration commits; committed parameters then drive per-round
// resampling of X_d for the rest of the horizon.
class DgEtc {
 public:
  DgEtc(int d, DgEtcParams params, RngStream rng);

  // Plays exactly one round. Throws std::logic_error past the horizon.
  void step(BanditView& env);

  bool exploring() const { return item_ < d_; }
  std::int64_t rounds_played() const { return t_; }
  std::int64_t exploration_rounds() const { return exploration_rounds_; }
  std::int64_t abandoned_rounds() const { return abandoned_rounds_; }
  const EstimatorState& estimator() const { return est_; }
  const std::vector<CommitRecord>& commits() const { return commits_; }
  double confidence() const { return g_; }
  std::int64_t tau_cap() const { return tau_cap_; }
  Phase phase_of_last_round() const { return last_phase_; }

  // Commit every remaining item through the default rule on current
  // estimates (exit = truncated). Called when the horizon ends mid-phase.
  void finalize_truncated();
  bool truncated() const { return truncated_; }

 private:
  void commit_item(int item, const UpdExpResult& upd);

  int d_;
  DgEtcParams params_;
  RngStream rng_;
  double g_;
  std::int64_t tau_cap_;

  EstimatorState est_;
  int item_ = 0;       // current exploration item, d means exploiting
  int block_pos_ = 0;  // 0..3 within the current estimation block
  ItemSet block_x_, block_y_, play_buf_;
  double block_z_[4] = {0, 0, 0, 0};

  std::int64_t t_ = 0;
  std::int64_t exploration_rounds_ = 0;
  std::int64_t abandoned_rounds_ = 0;
  std::vector<CommitRecord> commits_;
  Phase last_phase_ = Phase::explore;
  bool truncated_ = false;
};

// Drives DgEtc for exactly T rounds against env and assembles the trace.
// Warns (trace flag) when d (T sqrt(ln dT))^(2/3) > T/2, the regime where the
// exploration budget may not fit the horizon.
RegretTrace run_dgetc(Environment& env, const DgEtcParams& params,
                      RngStream alg_rng, const TraceOptions& opts = {});

// Fixed-budget explore-then-commit baseline: every item gets exactly
// m = ceil(T^(2/3) ln(T)^(1/3)) estimation blocks over hard-committed
// prefix sets, then commits a draw from the default rule; after step d it
// plays the final set X_d unchanged (commit-to-set semantics).
RegretTrace run_rgl(Environment& env, std::int64_t T, RngStream alg_rng,
                    const TraceOptions& opts = {});

}  // namespace submax

#endif
