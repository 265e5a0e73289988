#pragma once

#include <cstdint>
#include <string_view>

namespace ilhf {

// Deterministic xoshiro256++ generator with named-stream derivation.
//
// Every randomness consumer (corpus generation, prompt sampling, labels,
// ensemble init, bootstrap, ...) owns its own stream derived from
// (master seed, label, index), so results do not depend on the order in
// which consumers happen to draw. Identical stream state always yields an
// identical draw sequence, on any platform: no libc distributions are used.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  // Derive an independent stream for a named consumer. `index` is typically
  // the experiment seed, so per-seed streams are order-insensitive.
  static Rng stream(uint64_t master, std::string_view label, uint64_t index = 0);

  uint64_t next_u64();

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller; consumes exactly two raw draws per call.
  double normal();
  double normal(double mean, double stddev);

  bool bernoulli(double p);

  // Unbiased integer in [0, n); n must be positive.
  uint32_t uniform_int(uint32_t n);

 private:
  uint64_t s_[4];
};

}  // namespace ilhf
