#ifndef SUBMAX_ENVIRONMENT_HPP
#define SUBMAX_ENVIRONMENT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "submax/item_set.hpp"
#include "submax/rng.hpp"
#include "submax/set_function.hpp"

namespace submax {

// Additive reward noise. The declared sigma is a valid sub-Gaussian scale:
// sigma for gaussian, the half-width w for uniform on [-w, w] (w^2-sub-
// Gaussian), and a tiny positive stand-in for the noiseless channel.
struct NoiseModel {
  enum class Kind { gaussian, uniform_bounded, none };

  Kind kind = Kind::gaussian;
  double param = 0.1;

  static NoiseModel gaussian(double sigma);
  static NoiseModel uniform_bounded(double half_width);
  static NoiseModel none();

  double declared_sigma() const;
  double draw(RngStream& rng) const;
  std::string to_string() const;
};

// Stochastic bandit channel over a set-function: each pull returns
// f(A) + fresh noise and advances the round counter. Rewards are not clipped
// to [0, c]. The true per-round values are logged for regret accounting but
// are reachable only through this class, never through the BanditView handed
// to algorithms. One Environment per replication; not thread-safe.
class Environment {
 public:
  Environment(SetFunction f, NoiseModel noise, RngStream rng);

  int item_count() const { return f_.item_count(); }
  double range_bound() const { return f_.range_bound(); }
  const NoiseModel& noise() const { return noise_; }

  // Play A, receive a noisy reward; returns (z, round index after the pull).
  std::pair<double, std::int64_t> pull(const ItemSet& A);

  std::int64_t rounds_elapsed() const { return t_; }

  // Harness-only access: exact value without consuming a round.
  double true_value(const ItemSet& A) const { return f_.eval(A); }

  struct RoundLog {
    double true_value;
    double observed;
  };
  const std::vector<RoundLog>& round_log() const { return log_; }

  void reserve_rounds(std::int64_t T) { log_.reserve(static_cast<std::size_t>(T)); }

 private:
  SetFunction f_;
  NoiseModel noise_;
  RngStream rng_;
  std::int64_t t_ = 0;
  std::vector<RoundLog> log_;
};

// The only interface algorithms get: pull and static problem facts. No path
// to noiseless values.
class BanditView {
 public:
  explicit BanditView(Environment& env) : env_(&env) {}

  int item_count() const { return env_->item_count(); }
  double pull(const ItemSet& A) { return env_->pull(A).first; }

 private:
  Environment* env_;
};

}  // namespace submax

#endif
