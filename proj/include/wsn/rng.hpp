#pragma once

#include <cstdint>
#include <random>

namespace wsn {

/// Seeded uniform source. Wraps std::mt19937_64, whose output sequence is
/// fixed by the C++ standard, and converts to [0, 1) with the top 53 bits
/// so draws are reproducible across standard libraries and languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double operator()() { return uniform(); }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the per-round stream (election draws). Distinct from the
/// deployment stream so that protocols sharing a seed share a deployment.
constexpr std::uint64_t round_stream_seed(std::uint64_t seed) {
  return seed ^ 0x9E3779B97F4A7C15ULL;
}

}  // namespace wsn
