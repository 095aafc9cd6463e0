#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "classcoupler/coupling.h"
#include "classcoupler/deviate_store.h"

namespace classcoupler {

// Target for the perfect independent Metropolis-Hastings sampler over real-valued
// states (finite targets encode their states as integer-valued doubles).
// pi = k * h for an unknown constant k; q is the independent candidate density.
struct Imh_target {
  std::function<double(double)> log_h;
  std::function<double(double)> log_q;
  std::function<double(Uniform_stream&)> sample_q;
  // Maximizes h/q: the state hardest to leave.
  double lowest_state = 0.0;
};

// min{1, [h(y)/q(y)] / [h(x)/q(x)]}, or 1 when h(x) q(y) = 0.
// Throws std::domain_error on NaN or +inf log values.
auto imh_accept_ratio(const Imh_target& target, double x, double y) -> double;

// Sampler bound to a target whose lowest state has been checked by probing
// `probes` candidate draws; throws Contract_violation if a probe beats it.
class Perfect_imh {
 public:
  explicit Perfect_imh(Imh_target target, std::size_t probes = 1000, std::uint64_t probe_seed = 0x1e5);

  auto target() const -> const Imh_target& { return target_; }
  auto recipe() const -> const Deviate_recipe& { return recipe_; }

  // Finds the smallest T for which the lower path from the lowest state at -T
  // accepts its candidate, then runs the chain forward to time 0 with the stored
  // deviates. Only the lower path is simulated.
  auto sample(Deviate_store& store, const Coupling_options& options = {}) const -> Coupling_result<double>;

  // State at time 0 of the chain started in `start` at time -from_t, driven by
  // the records already in `store` (generated on demand if missing).
  auto forward(Deviate_store& store, double start, std::size_t from_t) const -> double;

 private:
  Imh_target target_;
  Deviate_recipe recipe_;
};

}  // namespace classcoupler

namespace classcoupler {

// Finite target on states 0..K-1 with unnormalized weights `h` and candidate
// probabilities proportional to `q` (uniform when `q` is empty). The lowest
// state is the argmax of h/q. Throws std::invalid_argument on empty or negative
// weights, or if `q` and `h` differ in length.
auto discrete_imh_target(std::vector<double> h, std::vector<double> q = {}) -> Imh_target;

}  // namespace classcoupler
