#pragma once

#include <array>
#include <cstdint>

namespace qreg {

/// Deterministic uniform stream used to simulate measurement randomness.
///
/// The generator is xoshiro256** (Blackman & Vigna) with its 256-bit state
/// seeded by four successive SplitMix64 outputs of `seed`. Doubles are built
/// from the top 53 bits of each output, so the stream is bit-identical on
/// every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept;
  /// Uniform real in [0, 1).
  double uniform() noexcept;
  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace qreg
