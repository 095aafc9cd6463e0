#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

#include "classcoupler/coupler_model.h"
#include "classcoupler/coupling.h"
#include "classcoupler/perfect_imh.h"

namespace classcoupler {

// Calls per_draw(i) for every i in [0, n) on `workers` threads and returns the
// results in index order. Draws are handed out in small chunks, so the result
// never depends on the worker count as long as per_draw depends only on i.
template <typename Fn>
auto parallel_draws(std::size_t n, std::size_t workers, Fn&& per_draw)
    -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  auto results = std::vector<std::optional<Result>>(n);
  constexpr auto chunk = std::size_t{16};
  auto next = std::atomic<std::size_t>{0};
  auto failure = std::exception_ptr{};
  auto failure_mutex = std::mutex{};

  auto work = [&] {
    try {
      for (auto begin = next.fetch_add(chunk); begin < n; begin = next.fetch_add(chunk)) {
        for (auto i = begin; i != std::min(begin + chunk, n); ++i) {
          results[i].emplace(per_draw(i));
        }
      }
    } catch (...) {
      auto lock = std::lock_guard{failure_mutex};
      if (!failure) {
        failure = std::current_exception();
      }
      next.store(n);
    }
  };

  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
  if (workers == 1) {
    work();
  } else {
    auto pool = std::vector<std::jthread>{};
    pool.reserve(workers);
    for (auto w = std::size_t{0}; w != workers; ++w) {
      pool.emplace_back(work);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  auto out = std::vector<Result>{};
  out.reserve(n);
  for (auto& r : results) {
    out.push_back(std::move(*r));
  }
  return out;
}

template <typename State>
struct Draw_outcome {
  std::optional<State> draw;  // empty when the horizon was exceeded
  std::size_t bct = 0;        // coupling time, or the horizon reached on failure
  std::size_t mh_steps = 0;

  auto operator==(const Draw_outcome&) const -> bool = default;
};

// Draw i uses a deviate store seeded with derive_draw_seed(seed, i).
auto run_coupler_draws(const Coupler_model& model, std::size_t draws, std::uint64_t seed,
                       const Coupling_options& options, std::size_t workers)
    -> std::vector<Draw_outcome<Mixed_state>>;

auto run_imh_draws(const Perfect_imh& sampler, std::size_t draws, std::uint64_t seed, const Coupling_options& options,
                   std::size_t workers) -> std::vector<Draw_outcome<double>>;

}  // namespace classcoupler
