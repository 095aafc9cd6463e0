#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "classcoupler/coupler_model.h"
#include "classcoupler/estimator.h"
#include "classcoupler/run_driver.h"

namespace classcoupler {

struct Run_summary {
  std::string model;
  std::uint64_t seed = 0;
  std::size_t draws_requested = 0;
  std::size_t draws_completed = 0;
  std::size_t horizon_exceeded = 0;
  std::size_t mh_steps = 0;
  Proportion_estimate atom_prob{};
  Bct_summary bct{};
  std::string effect_name;
  Histogram effect_histogram;
  Histogram bct_histogram;
};

// Aggregates completed draws; draws that hit the horizon are counted, not estimated.
// Throws std::invalid_argument when no draw completed.
auto summarize(const Coupler_model& model, std::string name, std::uint64_t seed,
               std::span<const Draw_outcome<Mixed_state>> outcomes, std::size_t bins) -> Run_summary;

// Deterministic part of the JSON report; never contains timings.
auto to_json(const Run_summary& summary) -> nlohmann::json;
auto to_json(const Histogram& histogram) -> nlohmann::json;

// Header row, then one row per draw: draw_index, class, coordinates..., bct.
// Draws past the horizon have empty coordinate cells and class "none".
auto write_draws_csv(std::ostream& out, const Coupler_model& model, std::span<const Draw_outcome<Mixed_state>> outcomes)
    -> void;

// bin_low,bin_high,count
auto write_histogram_csv(std::ostream& out, const Histogram& histogram) -> void;

}  // namespace classcoupler
