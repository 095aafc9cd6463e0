#include "classcoupler/perfect_imh.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "classcoupler/errors.h"

namespace classcoupler {

namespace {

auto log_weight(const Imh_target& target, double x) -> double {
  auto lh = target.log_h(x);
  auto lq = target.log_q(x);
  if (std::isnan(lh) || std::isnan(lq) || lh == std::numeric_limits<double>::infinity() ||
      lq == std::numeric_limits<double>::infinity()) {
    throw std::domain_error{"IMH target produced a NaN or infinite log density"};
  }
  return lh - lq;
}

}  // namespace

auto imh_accept_ratio(const Imh_target& target, double x, double y) -> double {
  auto lh_x = target.log_h(x);
  auto lq_y = target.log_q(y);
  if (std::isnan(lh_x) || std::isnan(lq_y)) {
    throw std::domain_error{"IMH target produced a NaN log density"};
  }
  if (std::isinf(lh_x) && lh_x < 0.0) {
    return 1.0;
  }
  if (std::isinf(lq_y) && lq_y < 0.0) {
    return 1.0;
  }
  auto log_r = log_weight(target, y) - log_weight(target, x);
  return log_r >= 0.0 ? 1.0 : std::exp(log_r);
}

Perfect_imh::Perfect_imh(Imh_target target, std::size_t probes, std::uint64_t probe_seed)
    : target_{std::move(target)} {
  if (!target_.log_h || !target_.log_q || !target_.sample_q) {
    throw Contract_violation{"IMH target is missing a density or the candidate sampler"};
  }
  auto lowest = log_weight(target_, target_.lowest_state);
  auto stream = Uniform_stream{probe_seed};
  for (auto i = std::size_t{0}; i != probes; ++i) {
    auto x = target_.sample_q(stream);
    auto w = log_weight(target_, x);
    if (w > lowest + 1e-12 * std::max(1.0, std::abs(lowest))) {
      throw Contract_violation{"supplied lowest state does not maximize h/q (probe " + std::to_string(x) + " beats it)"};
    }
  }
  recipe_ = Deviate_recipe{
      .arity = 1,
      .draw = [sample = target_.sample_q](Uniform_stream& s, std::span<double> out) { out[0] = sample(s); },
  };
}

auto Perfect_imh::sample(Deviate_store& store, const Coupling_options& options) const -> Coupling_result<double> {
  auto steps = std::size_t{0};
  auto t = std::size_t{1};
  auto scanned = std::size_t{0};  // records 1..scanned are known not to hold the funnel event
  while (t <= options.max_horizon) {
    // The chain from the lowest state at -t has coalesced by time 0 iff the lower
    // path accepts at some step in 1..t; the latest such event is the first one found
    // scanning n = 1, 2, ...
    for (auto n = scanned + 1; n <= t; ++n) {
      const auto& record = store.get_or_generate(n, recipe_);
      auto candidate = record.candidate_deviates[0];
      ++steps;
      if (record.accept_u <= imh_accept_ratio(target_, target_.lowest_state, candidate)) {
        auto draw = candidate;
        for (auto k = n - 1; k >= 1; --k) {
          const auto& next = store.get_or_generate(k, recipe_);
          ++steps;
          if (next.accept_u <= imh_accept_ratio(target_, draw, next.candidate_deviates[0])) {
            draw = next.candidate_deviates[0];
          }
        }
        auto bct = options.schedule == Horizon_schedule::linear ? n : t;
        return {.draw = draw, .bct = bct, .mh_steps = steps};
      }
    }
    scanned = t;
    t = next_horizon(t, options.schedule);
  }
  throw Horizon_exceeded{scanned, steps};
}

auto Perfect_imh::forward(Deviate_store& store, double start, std::size_t from_t) const -> double {
  auto state = start;
  for (auto k = from_t; k >= 1; --k) {
    const auto& record = store.get_or_generate(k, recipe_);
    if (record.accept_u <= imh_accept_ratio(target_, state, record.candidate_deviates[0])) {
      state = record.candidate_deviates[0];
    }
  }
  return state;
}

}  // namespace classcoupler

namespace classcoupler {

auto discrete_imh_target(std::vector<double> h, std::vector<double> q) -> Imh_target {
  if (h.empty()) {
    throw std::invalid_argument{"discrete target needs at least one state"};
  }
  if (q.empty()) {
    q.assign(h.size(), 1.0);
  }
  if (q.size() != h.size()) {
    throw std::invalid_argument{"candidate and target weights differ in length"};
  }
  auto q_total = 0.0;
  for (auto i = std::size_t{0}; i != h.size(); ++i) {
    if (!(h[i] >= 0.0) || !(q[i] >= 0.0) || !std::isfinite(h[i]) || !std::isfinite(q[i])) {
      throw std::invalid_argument{"discrete weights must be finite and nonnegative"};
    }
    q_total += q[i];
  }
  if (!(q_total > 0.0)) {
    throw std::invalid_argument{"candidate weights sum to zero"};
  }
  auto cdf = std::vector<double>(q.size());
  auto running = 0.0;
  for (auto i = std::size_t{0}; i != q.size(); ++i) {
    q[i] /= q_total;
    running += q[i];
    cdf[i] = running;
  }
  auto lowest = std::size_t{0};
  auto best = -std::numeric_limits<double>::infinity();
  for (auto i = std::size_t{0}; i != h.size(); ++i) {
    if (q[i] > 0.0 && std::log(h[i]) - std::log(q[i]) > best) {
      best = std::log(h[i]) - std::log(q[i]);
      lowest = i;
    }
  }
  auto index = [n = h.size()](double x) {
    auto i = static_cast<long long>(std::llround(x));
    return (i < 0 || static_cast<std::size_t>(i) >= n || static_cast<double>(i) != x) ? n : static_cast<std::size_t>(i);
  };
  auto log_at = [index](std::vector<double> w) {
    return [w = std::move(w), index](double x) {
      auto i = index(x);
      return i == w.size() ? -std::numeric_limits<double>::infinity() : std::log(w[i]);
    };
  };
  return Imh_target{
      .log_h = log_at(h),
      .log_q = log_at(q),
      .sample_q =
          [cdf](Uniform_stream& s) {
            auto u = s.uniform01();
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            auto i = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
            return static_cast<double>(i);
          },
      .lowest_state = static_cast<double>(lowest),
  };
}

}  // namespace classcoupler
