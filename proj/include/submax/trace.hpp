#ifndef SUBMAX_TRACE_HPP
#define SUBMAX_TRACE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "submax/item_set.hpp"

namespace submax {

enum class Phase : std::uint8_t { explore, exploit };

enum class ExitBranch : std::uint8_t { lambda, cap, truncated };

const char* to_string(Phase phase);
const char* to_string(ExitBranch branch);

// Per-item commitment record emitted when an exploration step ends.
struct CommitRecord {
  int item = 0;
  std::int64_t tau = 0;        // completed estimation blocks
  double add_gain_hat = 0.0;   // running mean of add-gain differences
  double remove_gain_hat = 0.0;
  double p = 0.5;              // committed Bernoulli parameter
  ExitBranch exit = ExitBranch::truncated;
};

struct RoundRecord {
  std::int64_t t = 0;  // 1-based round index
  Phase phase = Phase::explore;
  ItemSet action;
  double true_value = 0.0;
  double observed = 0.0;
  double inst_regret = 0.0;  // 0.5 f(A*) - f(A_t), filled by compute_regret
  double cum_regret = 0.0;
};

// Full record of one algorithm run. Per-round rows are optional (heavy runs
// keep only the streaming aggregates); commitment records, flags and counters
// are always present. Regret fields require compute_regret.
struct RegretTrace {
  int d = 0;
  std::int64_t horizon = 0;
  std::int64_t rounds_played = 0;

  std::vector<RoundRecord> rounds;  // empty when record_rounds was off
  std::vector<CommitRecord> commits;

  bool truncated = false;
  bool horizon_condition_warning = false;  // exploration budget vs T check

  std::int64_t exploration_rounds = 0;  // 4 * sum tau + abandoned rounds
  std::int64_t abandoned_rounds = 0;    // rounds of the cut-off final block
  std::int64_t exploit_rounds = 0;

  double true_value_sum = 0.0;          // sum of f(A_t) over all rounds
  double exploit_true_value_sum = 0.0;  // same, exploitation rounds only

  // Filled by compute_regret:
  double astar_value = std::numeric_limits<double>::quiet_NaN();
  double final_regret = std::numeric_limits<double>::quiet_NaN();
  double exploit_regret_mean = std::numeric_limits<double>::quiet_NaN();
};

struct TraceOptions {
  bool record_rounds = true;
};

}  // namespace submax

#endif
