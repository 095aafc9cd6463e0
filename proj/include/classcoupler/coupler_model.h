#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "classcoupler/deviate_store.h"
#include "classcoupler/mixed_state.h"

namespace classcoupler {

// What the class coupler needs from a target. Every state of a class receives
// the same candidate at a given time step, and that candidate always lies in the
// other class. Implementations must be immutable after construction so one
// instance can serve concurrent draws.
class Coupler_model {
 public:
  virtual ~Coupler_model() = default;

  virtual auto deviate_recipe() const -> const Deviate_recipe& = 0;

  virtual auto class_of(const Mixed_state& state) const -> Class_id = 0;

  // Candidate offered to every state of class `from` at the step described by `record`.
  virtual auto candidate_for_class(Class_id from, const Deviate_record& record) const -> Mixed_state = 0;

  // Unclamped log r(from, to) of the Metropolis-Hastings acceptance probability.
  // Throws Contract_violation for a same-class pair.
  virtual auto log_accept_ratio(const Mixed_state& from, const Mixed_state& to) const -> double = 0;

  // log of the minimum of r(x, candidate) over every state x of class `source`.
  virtual auto log_min_ratio_into(const Mixed_state& candidate, Class_id source) const -> double = 0;

  // True when class one is a single point; enables the one-step coupling route.
  virtual auto class_one_is_singleton() const -> bool = 0;
  // The single class-one state. Throws Contract_violation if class one is not a singleton.
  virtual auto class_one_point() const -> Mixed_state = 0;

  // A state of class `c` drawn from the prior restricted to that class. Used by
  // probes and funnel checks, never by the sampler itself.
  virtual auto random_state(Class_id c, Uniform_stream& stream) const -> Mixed_state = 0;

  // Flat numeric view of a state for output, atoms replaced by their location.
  virtual auto coordinate_names() const -> std::vector<std::string> = 0;
  virtual auto coordinates(const Mixed_state& state) const -> std::vector<double> = 0;

  // Scalar whose atom is the null hypothesis (mu, or mu1 - mu2); used for histograms.
  virtual auto effect_name() const -> std::string = 0;
  virtual auto effect(const Mixed_state& state) const -> double = 0;
};

struct Dominance_report {
  std::size_t checked = 0;
  std::size_t violations = 0;
  // Smallest observed log r(x, c) - log_min_ratio_into(c, class(x)); negative means a violation.
  double worst_margin = 0.0;
};

// Randomized check that log_min_ratio_into really is a class minimum: `probes`
// random states of each class against fresh candidates.
auto probe_min_ratio_dominance(const Coupler_model& model, std::size_t probes, std::uint64_t seed)
    -> Dominance_report;

}  // namespace classcoupler
