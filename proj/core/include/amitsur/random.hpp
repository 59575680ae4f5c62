#pragma once

#include <cstdint>
#include <random>

namespace amitsur {

/// Seed for the deterministic pseudorandom stream used by every randomised step.
struct RngSeed {
  std::uint64_t value = 0;
};

/// mt19937_64 with a portable mapping to ranges; identical draws on every platform.
class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace amitsur
