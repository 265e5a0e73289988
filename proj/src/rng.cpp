#include "rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ilhf {

namespace {

// splitmix64 finalizer; used for seeding and stream-label mixing.
uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(uint64_t seed) {
  // Expand the seed through splitmix64; the state is never all-zero because
  // mix64 is a bijection applied to four distinct inputs.
  uint64_t x = seed;
  for (auto& word : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    word = mix64(x);
  }
}

Rng Rng::stream(uint64_t master, std::string_view label, uint64_t index) {
  // FNV-1a over (master, index, label), then a splitmix64 finalizer.
  uint64_t h = 14695981039346656037ULL;
  auto absorb = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  absorb(master);
  absorb(index);
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return Rng(mix64(h));
}

uint64_t Rng::next_u64() {
  // xoshiro256++
  const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double Rng::normal() {
  // Box-Muller; u1 shifted away from zero so log() stays finite.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::normal(double mean, double stddev) {
  return mean + stddev * normal();
}

bool Rng::bernoulli(double p) {
  return uniform() < p;
}

uint32_t Rng::uniform_int(uint32_t n) {
  if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
  // Rejection to keep the draw unbiased.
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return static_cast<uint32_t>(x % n);
}

}  // namespace ilhf
