#pragma once

#include <cstdint>

namespace arkanoid {

/// 64-bit linear congruential generator with a fixed, documented recurrence so
/// replays are reproducible in any language:
///
///   state' = state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
///   r      = (state' >> 11) / 2^53                               in [0, 1)
///
/// The state is advanced before each draw; the seed itself is never emitted.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  constexpr explicit Lcg64(std::uint64_t seed = 0) : state_(seed) {}

  constexpr std::uint64_t next_u64() {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  constexpr double next_unit() {
    return static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
  }

  constexpr std::uint64_t state() const { return state_; }

  friend constexpr bool operator==(const Lcg64&, const Lcg64&) = default;

 private:
  std::uint64_t state_;
};

}  // namespace arkanoid
