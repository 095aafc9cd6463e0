#pragma once

#include <cstddef>

#include <boost/container/static_vector.hpp>

#include "classcoupler/coupler_model.h"
#include "classcoupler/coupling.h"
#include "classcoupler/deviate_store.h"
#include "classcoupler/mixed_state.h"

namespace classcoupler {

using Class_coupling_result = Coupling_result<Mixed_state>;

// Paths still alive after a stage-one coupling at backward time -start_t:
// they sit at time -start_t + 1. Never more than two.
struct Two_stage_state {
  boost::container::static_vector<Mixed_state, 2> survivors;
  std::size_t start_t = 0;
};

// Metropolis-Hastings accept test with a shared uniform: u <= min{1, exp(log_r)}.
auto accept(double log_r, double u) -> bool;

// One Metropolis-Hastings step from `state` using `record`; returns the new state.
auto mh_step(const Coupler_model& model, const Mixed_state& state, const Deviate_record& record) -> Mixed_state;

// Advances the survivors to time 0 with the stored per-step deviates, dropping
// duplicates as soon as two paths become structurally equal. The result holds
// one state when the paths merged.
auto forward_run(const Coupler_model& model, Deviate_store& store, const Two_stage_state& survivors,
                 std::size_t* mh_steps = nullptr) -> boost::container::static_vector<Mixed_state, 2>;

// State at time 0 of the single path started in `start` at time -from_t.
auto forward_from(const Coupler_model& model, Deviate_store& store, const Mixed_state& start,
                  std::size_t from_t) -> Mixed_state;

// Scalar case: class one is the single atom. At each -t, R1 is the class-two
// minimum ratio into the atom and R2 the atom's ratio to its own candidate.
// R2 < u <= R1 couples every path onto the atom in one step; u <= min(R1, R2)
// leaves two survivors that must merge before time 0.
// Throws Contract_violation if class one is not a singleton, Horizon_exceeded
// past options.max_horizon.
auto couple_single_atom(const Coupler_model& model, Deviate_store& store, const Coupling_options& options = {})
    -> Class_coupling_result;

// Two classes, each possibly a continuum. Stage one needs both classes to accept
// their cross-class candidates at the same step (u <= min(R_I, R_II)); the two
// survivors must then merge by time 0. The search starts at t = 3, the shortest
// horizon at which two survivors can merge.
auto couple_two_class(const Coupler_model& model, Deviate_store& store, const Coupling_options& options = {})
    -> Class_coupling_result;

// couple_single_atom when the model's class one is a singleton, couple_two_class otherwise.
auto couple(const Coupler_model& model, Deviate_store& store, const Coupling_options& options = {})
    -> Class_coupling_result;

}  // namespace classcoupler
