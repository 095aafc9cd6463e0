#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "classcoupler/mixed_state.h"

namespace classcoupler {

inline constexpr double k_wald_z95 = 1.96;

struct Proportion_estimate {
  double estimate;
  double ci_low;
  double ci_high;
};

// Wald interval p +- z sqrt(p (1 - p) / n), clipped to [0, 1]. Throws
// std::invalid_argument for n = 0.
auto wald_interval(std::size_t successes, std::size_t n, double z = k_wald_z95) -> Proportion_estimate;

// Fraction of draws carrying an atom tag, with its Wald interval. Atom
// membership is read from the tag, never from a numeric tolerance.
auto atom_probability(std::span<const Mixed_state> draws, double z = k_wald_z95) -> Proportion_estimate;

struct Bct_summary {
  double mean;
  std::size_t min;
  std::size_t max;
};

// Throws std::invalid_argument on empty input.
auto bct_summary(std::span<const std::size_t> times) -> Bct_summary;

// Equal-width bins over [lo, hi] = [min, max] of the input; the maximum lands in
// the last bin. With a single distinct value everything lands in bin 0.
struct Histogram {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> counts;

  auto total() const -> std::size_t;
  auto bin_width() const -> double;
};

// Throws std::invalid_argument on empty input or bin_count = 0.
auto histogram(std::span<const double> values, std::size_t bin_count) -> Histogram;

}  // namespace classcoupler
