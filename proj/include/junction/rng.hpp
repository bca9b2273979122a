#pragma once

#include <cstdint>
#include <string_view>

namespace junction {

// xoshiro256++ with splitmix64 seeding. All stochastic components draw from
// named streams derived from one master seed, so runs are reproducible
// bit-for-bit regardless of thread count or platform stdlib.
class Rng {
 public:
  Rng() : Rng(0) {}
  explicit Rng(uint64_t seed);

  uint64_t next_u64();

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi); returns lo for a zero-width interval.
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Unbiased integer in [0, n), n > 0 (Lemire's method).
  uint64_t uniform_int(uint64_t n);

  bool bernoulli(double p) { return uniform01() < p; }

  struct State {
    uint64_t s[4];
  };
  State state() const { return {{s_[0], s_[1], s_[2], s_[3]}}; }
  void set_state(const State& st) {
    for (int i = 0; i < 4; ++i) s_[i] = st.s[i];
  }

 private:
  uint64_t s_[4];
};

// Derives an independent stream from (master, tag, index). Equal inputs give
// the same stream; distinct tags or indices give unrelated streams.
Rng derive_stream(uint64_t master_seed, std::string_view tag, uint64_t index = 0);

// FNV-1a over arbitrary bytes; used for stream tags and content hashes.
uint64_t fnv1a64(const void* data, size_t len, uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace junction
