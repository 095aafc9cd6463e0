#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace classcoupler {

// How the backward start time grows after a failed coupling attempt.
enum class Horizon_schedule {
  linear,    // t := t + 1, the schedule the reproduction runs use
  doubling,  // t := 2t
};

struct Coupling_options {
  std::size_t max_horizon = 1'000'000;
  Horizon_schedule schedule = Horizon_schedule::linear;
};

template <typename State>
struct Coupling_result {
  State draw;
  std::size_t bct = 0;       // backward coupling time T >= 1
  std::size_t mh_steps = 0;  // acceptance-ratio evaluations spent on this draw
};

class Horizon_exceeded : public std::runtime_error {
 public:
  Horizon_exceeded(std::size_t horizon_reached, std::size_t mh_steps)
      : std::runtime_error{"no backward coupling within horizon " + std::to_string(horizon_reached) +
                           " (" + std::to_string(mh_steps) + " acceptance evaluations)"},
        horizon_reached_{horizon_reached},
        mh_steps_{mh_steps} {}

  auto horizon_reached() const -> std::size_t { return horizon_reached_; }
  auto mh_steps() const -> std::size_t { return mh_steps_; }

 private:
  std::size_t horizon_reached_;
  std::size_t mh_steps_;
};

inline auto next_horizon(std::size_t t, Horizon_schedule schedule) -> std::size_t {
  return schedule == Horizon_schedule::linear ? t + 1 : 2 * t;
}

}  // namespace classcoupler
