#include "classcoupler/class_coupler.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "classcoupler/errors.h"

namespace classcoupler {

namespace {

inline constexpr std::size_t k_two_class_min_horizon = 3;

// Candidates for both classes at one step, built lazily.
class Step_candidates {
 public:
  Step_candidates(const Coupler_model& model, const Deviate_record& record) : model_{model}, record_{record} {}

  auto for_class(Class_id c) -> const Mixed_state& {
    auto& slot = c == Class_id::one ? one_ : two_;
    if (!slot) {
      slot = model_.candidate_for_class(c, record_);
    }
    return *slot;
  }

 private:
  const Coupler_model& model_;
  const Deviate_record& record_;
  std::optional<Mixed_state> one_;
  std::optional<Mixed_state> two_;
};

auto step_with(const Coupler_model& model, const Mixed_state& state, Step_candidates& candidates, double u,
               std::size_t& steps) -> Mixed_state {
  const auto& candidate = candidates.for_class(model.class_of(state));
  ++steps;
  return accept(model.log_accept_ratio(state, candidate), u) ? candidate : state;
}

// Backward start time at which the chain is actually restarted when the step
// -t is first examined. Steps between two horizons are all examined from the
// later one, so the schedule changes the reported coupling time, never the draw.
auto horizon_covering(std::size_t t, std::size_t horizon, Horizon_schedule schedule) -> std::size_t {
  while (horizon < t) {
    horizon = next_horizon(horizon, schedule);
  }
  return horizon;
}

}  // namespace

auto accept(double log_r, double u) -> bool {
  if (log_r >= 0.0) {
    return u <= 1.0;
  }
  return u <= std::exp(log_r);
}

auto mh_step(const Coupler_model& model, const Mixed_state& state, const Deviate_record& record) -> Mixed_state {
  auto candidates = Step_candidates{model, record};
  auto steps = std::size_t{0};
  return step_with(model, state, candidates, record.accept_u, steps);
}

auto forward_run(const Coupler_model& model, Deviate_store& store, const Two_stage_state& survivors,
                 std::size_t* mh_steps) -> boost::container::static_vector<Mixed_state, 2> {
  auto paths = survivors.survivors;
  if (paths.size() == 2 && paths[0] == paths[1]) {
    paths.pop_back();
  }
  auto steps = std::size_t{0};
  for (auto k = survivors.start_t; k-- > 1;) {
    const auto& record = store.get_or_generate(k, model.deviate_recipe());
    auto candidates = Step_candidates{model, record};
    for (auto& path : paths) {
      path = step_with(model, path, candidates, record.accept_u, steps);
    }
    if (paths.size() == 2 && paths[0] == paths[1]) {
      paths.pop_back();
    }
  }
  if (mh_steps != nullptr) {
    *mh_steps += steps;
  }
  return paths;
}

auto forward_from(const Coupler_model& model, Deviate_store& store, const Mixed_state& start, std::size_t from_t)
    -> Mixed_state {
  auto state = start;
  for (auto k = from_t; k >= 1; --k) {
    state = mh_step(model, state, store.get_or_generate(k, model.deviate_recipe()));
  }
  return state;
}

auto couple_single_atom(const Coupler_model& model, Deviate_store& store, const Coupling_options& options)
    -> Class_coupling_result {
  if (!model.class_one_is_singleton()) {
    throw Contract_violation{"single-atom coupling needs a model whose class one is a single point"};
  }
  const auto atom = model.class_one_point();
  auto steps = std::size_t{0};
  auto last_t = std::size_t{0};
  auto horizon = std::size_t{1};
  for (auto t = std::size_t{1}; t <= options.max_horizon; ++t) {
    last_t = t;
    horizon = horizon_covering(t, horizon, options.schedule);
    const auto& record = store.get_or_generate(t, model.deviate_recipe());
    auto atom_candidate = model.candidate_for_class(Class_id::one, record);
    auto log_r1 = model.log_min_ratio_into(atom, Class_id::two);
    auto log_r2 = model.log_accept_ratio(atom, atom_candidate);
    steps += 2;
    auto all_free_accept = accept(log_r1, record.accept_u);
    auto atom_accepts = accept(log_r2, record.accept_u);
    if (all_free_accept && !atom_accepts) {
      // Every path sits on the atom at -t+1.
      auto survivors = Two_stage_state{.survivors = {atom}, .start_t = t};
      auto at_zero = forward_run(model, store, survivors, &steps);
      return {.draw = at_zero.front(), .bct = horizon, .mh_steps = steps};
    }
    if (all_free_accept && atom_accepts && t >= 2) {
      auto survivors = Two_stage_state{.survivors = {atom_candidate, atom}, .start_t = t};
      auto at_zero = forward_run(model, store, survivors, &steps);
      if (at_zero.size() == 1) {
        return {.draw = at_zero.front(), .bct = horizon, .mh_steps = steps};
      }
    }
  }
  throw Horizon_exceeded{last_t, steps};
}

auto couple_two_class(const Coupler_model& model, Deviate_store& store, const Coupling_options& options)
    -> Class_coupling_result {
  auto steps = std::size_t{0};
  auto last_t = std::size_t{0};
  auto horizon = k_two_class_min_horizon;
  for (auto t = k_two_class_min_horizon; t <= options.max_horizon; ++t) {
    last_t = t;
    horizon = horizon_covering(t, horizon, options.schedule);
    const auto& record = store.get_or_generate(t, model.deviate_recipe());
    auto candidate_into_two = model.candidate_for_class(Class_id::one, record);
    auto candidate_into_one = model.candidate_for_class(Class_id::two, record);
    auto log_r_one = model.log_min_ratio_into(candidate_into_two, Class_id::one);
    auto log_r_two = model.log_min_ratio_into(candidate_into_one, Class_id::two);
    steps += 2;
    if (!accept(std::min(log_r_one, log_r_two), record.accept_u)) {
      continue;
    }
    auto survivors = Two_stage_state{.survivors = {candidate_into_one, candidate_into_two}, .start_t = t};
    auto at_zero = forward_run(model, store, survivors, &steps);
    if (at_zero.size() == 1) {
      return {.draw = at_zero.front(), .bct = horizon, .mh_steps = steps};
    }
  }
  throw Horizon_exceeded{last_t, steps};
}

auto couple(const Coupler_model& model, Deviate_store& store, const Coupling_options& options)
    -> Class_coupling_result {
  return model.class_one_is_singleton() ? couple_single_atom(model, store, options)
                                        : couple_two_class(model, store, options);
}

}  // namespace classcoupler
