#pragma once

#include <cstdint>

namespace classcoupler {

// SplitMix64 finalizer (Steele, Lea & Flood 2014). Bijective on 64-bit words.
constexpr auto splitmix64_mix(std::uint64_t z) -> std::uint64_t {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t k_golden_gamma = 0x9e3779b97f4a7c15ULL;

// Seed used for independent draw `draw_index` of a run started with `master_seed`.
// draw_seed(m, i) = mix(m ^ mix(i + golden)); independent of worker count and order.
constexpr auto derive_draw_seed(std::uint64_t master_seed, std::uint64_t draw_index) -> std::uint64_t {
  return splitmix64_mix(master_seed ^ splitmix64_mix(draw_index + k_golden_gamma));
}

// Counter-based stream of uniform variates. A stream is a pure function of its
// starting state, so two streams built from the same (seed, key) emit the same
// sequence. Single owner; not thread-safe.
class Uniform_stream {
 public:
  explicit constexpr Uniform_stream(std::uint64_t seed) : state_{seed} {}

  // Substream keyed by `key` under `seed`; the whole sequence depends only on (seed, key).
  static constexpr auto keyed(std::uint64_t seed, std::uint64_t key) -> Uniform_stream {
    return Uniform_stream{splitmix64_mix(seed + k_golden_gamma) ^ splitmix64_mix(~key)};
  }

  constexpr auto next_u64() -> std::uint64_t {
    state_ += k_golden_gamma;
    return splitmix64_mix(state_);
  }

  // Uniform on [0, 1) with 53 bits of resolution.
  constexpr auto uniform01() -> double {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on the open interval (0, 1); never returns 0 or 1.
  constexpr auto uniform_open01() -> double {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  constexpr auto state() const -> std::uint64_t { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace classcoupler
