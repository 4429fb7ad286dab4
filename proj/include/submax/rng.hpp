#ifndef SUBMAX_RNG_HPP
#define SUBMAX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <string_view>

namespace submax {

// Counter-based deterministic generator: SplitMix64 over a key derived from
// (seed, stream_id). Identical (seed, stream_id) reproduce the same sequence;
// distinct stream ids give statistically independent streams, so replications
// can run in parallel without sharing state. child(k) derives a further
// independent substream. The identity string goes into run metadata.
class RngStream {
 public:
  static constexpr std::string_view kIdentity = "splitmix64-ctr/1";

  RngStream() : RngStream(0, 0) {}

  RngStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_(mix(mix(seed + 0x2545F4914F6CDD1DULL) ^ mix(stream_id + 0x9E3779B97F4A7C15ULL))) {}

  std::uint64_t next_u64() {
    ++n_draws_;
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_ ^ key_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // P(true) = p for p in [0,1]; p<=0 never fires, p>=1 always fires.
  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal via Box-Muller; the spare value is cached.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
  }

  // Independent substream; deterministic function of (this stream's key, id).
  RngStream child(std::uint64_t id) const {
    RngStream s;
    s.key_ = mix(key_ ^ mix(id + 0xD6E8FEB86659FD93ULL));
    return s;
  }

  std::uint64_t draws() const { return n_draws_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t state_ = 0;
  std::uint64_t n_draws_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace submax

#endif
