#include "classcoupler/deviate_store.h"

#include <string>
#include <utility>

#include "classcoupler/errors.h"

namespace classcoupler {

auto Deviate_store::get_or_generate(Time_index t, const Deviate_recipe& recipe) -> const Deviate_record& {
  if (arity_ && *arity_ != recipe.arity) {
    throw Contract_violation{"deviate recipe arity " + std::to_string(recipe.arity) +
                             " does not match stored arity " + std::to_string(*arity_)};
  }
  if (recipe.arity > k_max_deviates_per_step) {
    throw Contract_violation{"deviate recipe arity " + std::to_string(recipe.arity) + " exceeds the per-step limit"};
  }
  if (t >= records_.size()) {
    records_.resize(t + 1);
  }
  auto& slot = records_[t];
  if (!slot) {
    auto stream = Uniform_stream::keyed(seed_, t);
    auto record = Deviate_record{};
    record.candidate_deviates.resize(recipe.arity);
    if (recipe.arity > 0) {
      recipe.draw(stream, std::span<double>{record.candidate_deviates.data(), recipe.arity});
    }
    record.accept_u = stream.uniform01();
    slot = record;
    arity_ = recipe.arity;
    ++materialized_;
  }
  return *slot;
}

auto Deviate_store::emplace(Time_index t, Deviate_record record) -> const Deviate_record& {
  if (arity_ && *arity_ != record.candidate_deviates.size()) {
    throw Contract_violation{"emplaced record arity does not match stored arity"};
  }
  if (t >= records_.size()) {
    records_.resize(t + 1);
  }
  if (records_[t]) {
    throw Contract_violation{"a record already exists at t = " + std::to_string(t)};
  }
  arity_ = record.candidate_deviates.size();
  records_[t] = std::move(record);
  ++materialized_;
  return *records_[t];
}

auto Deviate_store::find(Time_index t) const -> const Deviate_record* {
  if (t >= records_.size() || !records_[t]) {
    return nullptr;
  }
  return &*records_[t];
}

auto Deviate_store::reset(std::uint64_t seed) -> void {
  seed_ = seed;
  materialized_ = 0;
  arity_.reset();
  records_.clear();
}

}  // namespace classcoupler
