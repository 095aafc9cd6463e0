#include "classcoupler/model_config.h"

#include <fstream>

#include "classcoupler/errors.h"
#include "classcoupler/single_mean_model.h"
#include "classcoupler/two_sample_model.h"

namespace classcoupler {

namespace {

using nlohmann::json;

auto required(const json& j, const char* key) -> const json& {
  if (!j.is_object() || !j.contains(key)) {
    throw Config_error{std::string{"model config: missing field '"} + key + "'"};
  }
  return j.at(key);
}

template <typename T>
auto get(const json& j, const char* key) -> T {
  try {
    return required(j, key).get<T>();
  } catch (const json::exception& e) {
    throw Config_error{std::string{"model config: field '"} + key + "': " + e.what()};
  }
}

template <typename T>
auto get_or(const json& j, const char* key, T fallback) -> T {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

auto inv_gamma(const json& j, const char* shape_key, const char* rate_key) -> Inv_gamma_params {
  return Inv_gamma_params{get<double>(j, shape_key), get<double>(j, rate_key)};
}

auto single_mean_from_json(const json& config) -> std::shared_ptr<const Coupler_model> {
  auto prior = Atom_mixture_prior{get<double>(config, "p"), get_or(config, "atom_location", 0.0),
                                  Normal_params{get_or(config, "slab_mean", 0.0), get<double>(config, "slab_variance")}};
  const auto& variance = required(config, "variance");
  auto kind = get<std::string>(variance, "kind");
  auto data = get<std::vector<double>>(config, "data");
  if (kind == "known") {
    return std::make_shared<Single_mean_model>(std::move(data), prior, Known_variance{get<double>(variance, "v")});
  }
  if (kind == "inverse_gamma") {
    return std::make_shared<Single_mean_model>(std::move(data), prior, inv_gamma(variance, "shape", "rate"));
  }
  throw Config_error{"model config: unknown variance kind '" + kind + "'"};
}

auto two_sample_from_json(const json& config) -> std::shared_ptr<const Coupler_model> {
  const auto& variance = required(config, "variance");
  auto kind = get<std::string>(variance, "kind");
  auto cases = two_sample::Variance_case{two_sample::Known_variances{1.0, 1.0}};
  if (kind == "known") {
    cases = two_sample::Known_variances{get<double>(variance, "v1"), get<double>(variance, "v2")};
  } else if (kind == "common") {
    cases = two_sample::Common_variance{inv_gamma(variance, "shape", "rate")};
  } else if (kind == "separate") {
    cases = two_sample::Separate_variances{inv_gamma(variance, "shape1", "rate1"), inv_gamma(variance, "shape2", "rate2")};
  } else {
    throw Config_error{"model config: unknown two-sample variance kind '" + kind + "'"};
  }
  return std::make_shared<Two_sample_model>(get<std::vector<double>>(config, "data1"),
                                            get<std::vector<double>>(config, "data2"), get<double>(config, "p"),
                                            get<double>(config, "sigma1_sq"), get<double>(config, "sigma2_sq"), cases);
}

auto two_sample_preset(json variance) -> json {
  return json{
      {"model", "two_sample"},
      {"data1", {0.42, 1.31, -0.27, 0.85, 1.96, 0.12}},
      {"data2", {1.48, 2.03, 0.91, 2.77, 1.25, 1.69}},
      {"p", 0.5},
      {"sigma1_sq", 4.0},
      {"sigma2_sq", 4.0},
      {"variance", std::move(variance)},
  };
}

auto preset_json(std::string_view name) -> json {
  auto sim = [](double k2) {
    return json{
        {"model", "single_mean"},
        {"data", simulation_one_data()},
        {"p", 0.5},
        {"slab_variance", 100.0},
        {"variance", {{"kind", "inverse_gamma"}, {"shape", 1.0}, {"rate", k2}}},
    };
  };
  if (name == "sim1") {
    return sim(0.05);
  }
  if (name == "sim2") {
    return sim(1.0);
  }
  if (name == "two-sample-1") {
    return two_sample_preset({{"kind", "known"}, {"v1", 0.5}, {"v2", 0.5}});
  }
  if (name == "two-sample-2") {
    return two_sample_preset({{"kind", "common"}, {"shape", 2.0}, {"rate", 1.0}});
  }
  if (name == "two-sample-3") {
    return two_sample_preset({{"kind", "separate"}, {"shape1", 2.0}, {"rate1", 1.0}, {"shape2", 2.0}, {"rate2", 1.0}});
  }
  throw Config_error{"unknown preset '" + std::string{name} + "'"};
}

}  // namespace

auto simulation_one_data() -> std::vector<double> {
  return {0.575, 1.808, 0.532, -0.168, 0.529, 0.888, -1.368, -0.512, 2.667, 0.874};
}

auto preset_model(std::string_view name) -> std::shared_ptr<const Coupler_model> {
  return model_from_json(preset_json(name));
}

auto preset_names() -> std::vector<std::string> {
  return {"sim1", "sim2", "two-sample-1", "two-sample-2", "two-sample-3"};
}

auto model_from_json(const json& config) -> std::shared_ptr<const Coupler_model> {
  auto kind = get<std::string>(config, "model");
  try {
    if (kind == "single_mean") {
      return single_mean_from_json(config);
    }
    if (kind == "two_sample") {
      return two_sample_from_json(config);
    }
  } catch (const std::invalid_argument& e) {
    // Degenerate_data derives from invalid_argument; keep its message.
    throw Config_error{std::string{"model config rejected: "} + e.what()};
  }
  throw Config_error{"model config: unknown model '" + kind + "'"};
}

auto load_model_config(const std::filesystem::path& path) -> std::shared_ptr<const Coupler_model> {
  auto in = std::ifstream{path};
  if (!in) {
    throw Config_error{"cannot open model config " + path.string()};
  }
  auto config = json{};
  try {
    in >> config;
  } catch (const nlohmann::json::parse_error& e) {
    throw Config_error{"model config " + path.string() + " is not valid JSON: " + e.what()};
  }
  return model_from_json(config);
}

}  // namespace classcoupler
