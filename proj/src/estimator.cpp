#include "classcoupler/estimator.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace classcoupler {

auto wald_interval(std::size_t successes, std::size_t n, double z) -> Proportion_estimate {
  if (n == 0) {
    throw std::invalid_argument{"proportion estimate needs at least one draw"};
  }
  auto p = static_cast<double>(successes) / static_cast<double>(n);
  auto half_width = z * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return {.estimate = p, .ci_low = std::max(0.0, p - half_width), .ci_high = std::min(1.0, p + half_width)};
}

auto atom_probability(std::span<const Mixed_state> draws, double z) -> Proportion_estimate {
  auto hits = std::ranges::count_if(draws, [](const Mixed_state& s) { return s.has_atom_tag(); });
  return wald_interval(static_cast<std::size_t>(hits), draws.size(), z);
}

auto bct_summary(std::span<const std::size_t> times) -> Bct_summary {
  if (times.empty()) {
    throw std::invalid_argument{"coupling-time summary needs at least one value"};
  }
  auto sum = std::accumulate(times.begin(), times.end(), std::uint64_t{0});
  auto [lo, hi] = std::ranges::minmax_element(times);
  return {.mean = static_cast<double>(sum) / static_cast<double>(times.size()), .min = *lo, .max = *hi};
}

auto Histogram::total() const -> std::size_t { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

auto Histogram::bin_width() const -> double {
  return counts.empty() ? 0.0 : (hi - lo) / static_cast<double>(counts.size());
}

auto histogram(std::span<const double> values, std::size_t bin_count) -> Histogram {
  if (values.empty()) {
    throw std::invalid_argument{"histogram needs at least one value"};
  }
  if (bin_count == 0) {
    throw std::invalid_argument{"histogram needs at least one bin"};
  }
  auto [lo, hi] = std::ranges::minmax_element(values);
  auto h = Histogram{.lo = *lo, .hi = *hi, .counts = std::vector<std::size_t>(bin_count, 0)};
  auto width = h.bin_width();
  for (auto x : values) {
    auto bin = std::size_t{0};
    if (width > 0.0) {
      auto raw = std::floor((x - h.lo) / width);
      bin = std::min(static_cast<std::size_t>(std::max(raw, 0.0)), bin_count - 1);
    }
    ++h.counts[bin];
  }
  return h;
}

}  // namespace classcoupler
