#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>

#include <boost/container/static_vector.hpp>

#include "classcoupler/random_stream.h"

namespace classcoupler {

// Backward step index. Record t holds everything used by the transition from
// time -t to time -t+1: the candidate deviates for the proposal at -t+1 and the
// acceptance variate alpha_{-t}.
using Time_index = std::size_t;

inline constexpr std::size_t k_max_deviates_per_step = 8;

struct Deviate_record {
  boost::container::static_vector<double, k_max_deviates_per_step> candidate_deviates;
  double accept_u = 0.0;

  auto operator==(const Deviate_record&) const -> bool = default;
};

// How a model turns a keyed substream into its per-step candidate deviates.
struct Deviate_recipe {
  std::size_t arity = 0;
  std::function<void(Uniform_stream&, std::span<double>)> draw;
};

// Replayable random inputs for one perfect draw. The record at t is a pure
// function of (seed, t): request order never matters, and a record, once
// materialized, is never regenerated or modified.
class Deviate_store {
 public:
  explicit Deviate_store(std::uint64_t seed) : seed_{seed} {}

  // Throws Contract_violation if `recipe.arity` disagrees with a stored record
  // or exceeds k_max_deviates_per_step.
  auto get_or_generate(Time_index t, const Deviate_recipe& recipe) -> const Deviate_record&;

  // Installs a caller-built record at t (hand-traced scenarios). Throws
  // Contract_violation if t already holds a record or the arity disagrees.
  auto emplace(Time_index t, Deviate_record record) -> const Deviate_record&;

  // nullptr if the record at t has not been materialized.
  auto find(Time_index t) const -> const Deviate_record*;

  auto reset(std::uint64_t seed) -> void;

  auto seed() const -> std::uint64_t { return seed_; }
  auto materialized() const -> std::size_t { return materialized_; }

 private:
  std::uint64_t seed_;
  std::size_t materialized_ = 0;
  std::optional<std::size_t> arity_;
  // Indexed by t; references stay valid as the deque grows at the back.
  std::deque<std::optional<Deviate_record>> records_;
};

}  // namespace classcoupler
