#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace planbench {

// Splittable deterministic RNG. All randomness in the project flows through
// explicit instances of this class; there is no global generator. Bounded
// draws are implemented by hand so that results depend only on the engine
// stream, not on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(bounded(span));
  }

  // Uniform real in [0, 1).
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform_real(double lo, double hi) {
    return lo + (hi - lo) * uniform_real();
  }

  bool bernoulli(double p) { return uniform_real() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Independent substream keyed by `stream`; forking with the same key from
  // an Rng in the same state yields the same child.
  Rng fork(std::uint64_t stream) {
    return Rng(mix(next_u64() ^ mix(stream)));
  }

  // splitmix64 finalizer; also used to derive per-instance seeds.
  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  // Rejection-free enough for benchmark use: 128-bit multiply avoids modulo
  // bias without a retry loop.
  std::uint64_t bounded(std::uint64_t span) {
    if (span == 0) return next_u64();
    const auto x = static_cast<unsigned __int128>(next_u64());
    return static_cast<std::uint64_t>((x * span) >> 64);
  }

  std::mt19937_64 engine_;
};

}  // namespace planbench
