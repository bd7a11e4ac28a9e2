#pragma once

// Seeded generator for sweeps: std::mt19937_64 (fully specified by the
// standard) with bounded integers drawn by rejection, so a seed replays
// identically on every platform. std::uniform_int_distribution is avoided
// because its algorithm is implementation-defined.

#include <cstdint>
#include <random>

namespace hgkit {

class SweepRng {
 public:
  explicit SweepRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return engine_();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + x % span;
  }

  std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hgkit
