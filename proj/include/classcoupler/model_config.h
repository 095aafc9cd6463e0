#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "classcoupler/coupler_model.h"

namespace classcoupler {

// The ten observations of the single-mean reproduction runs.
auto simulation_one_data() -> std::vector<double>;

// Built-in models: "sim1", "sim2", "two-sample-1", "two-sample-2", "two-sample-3".
// Throws Config_error for an unknown name.
auto preset_model(std::string_view name) -> std::shared_ptr<const Coupler_model>;
auto preset_names() -> std::vector<std::string>;

// Builds a model from its JSON description (schema in README.md).
// Throws Config_error on missing or ill-typed fields.
auto model_from_json(const nlohmann::json& config) -> std::shared_ptr<const Coupler_model>;
auto load_model_config(const std::filesystem::path& path) -> std::shared_ptr<const Coupler_model>;

}  // namespace classcoupler
