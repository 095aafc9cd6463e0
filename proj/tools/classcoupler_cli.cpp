// classcoupler: perfect draws from spike-and-slab posteriors and finite IMH targets.
//
//   classcoupler run --preset sim1 --draws 100000 --seed 7 --out sim1.json
//   classcoupler run --config model.json --format csv --out draws.csv
//   classcoupler imh-demo --weights 1,2,3,4,5 --draws 100000

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "classcoupler/errors.h"
#include "classcoupler/estimator.h"
#include "classcoupler/model_config.h"
#include "classcoupler/perfect_imh.h"
#include "classcoupler/report.h"
#include "classcoupler/run_driver.h"

namespace {

using namespace classcoupler;
using nlohmann::json;

struct Run_config {
  std::string preset;
  std::string config_path;
  std::size_t draws = 1000;
  std::uint64_t seed = 1;
  std::size_t max_horizon = 1'000'000;
  std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::string out;
  std::string format = "json";
  std::string hist_out;
  std::size_t bins = 50;
  std::string schedule = "linear";
  std::vector<double> weights{1, 2, 3, 4, 5};
  std::vector<double> candidate;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) {
        throw std::runtime_error{"cannot write " + path};
      }
    }
  }
  auto stream() -> std::ostream& { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

auto options_of(const Run_config& c) -> Coupling_options {
  return {.max_horizon = c.max_horizon,
          .schedule = c.schedule == "doubling" ? Horizon_schedule::doubling : Horizon_schedule::linear};
}

auto seconds_since(std::chrono::steady_clock::time_point start) -> double {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

auto run_imh_demo(const Run_config& c) -> int {
  auto start = std::chrono::steady_clock::now();
  auto sampler = Perfect_imh{discrete_imh_target(c.weights, c.candidate)};
  auto outcomes = run_imh_draws(sampler, c.draws, c.seed, options_of(c), c.workers);

  auto k = c.weights.size();
  auto counts = std::vector<std::size_t>(k, 0);
  auto times = std::vector<std::size_t>{};
  auto exceeded = std::size_t{0};
  for (const auto& o : outcomes) {
    if (!o.draw) {
      ++exceeded;
      continue;
    }
    ++counts[static_cast<std::size_t>(*o.draw)];
    times.push_back(o.bct);
  }
  auto total_weight = 0.0;
  for (auto w : c.weights) {
    total_weight += w;
  }
  auto exact = std::vector<double>{};
  auto empirical = std::vector<double>{};
  auto tv = 0.0;
  for (auto i = std::size_t{0}; i != k; ++i) {
    exact.push_back(c.weights[i] / total_weight);
    empirical.push_back(times.empty() ? 0.0 : static_cast<double>(counts[i]) / static_cast<double>(times.size()));
    tv += 0.5 * std::abs(exact.back() - empirical.back());
  }
  auto summary = json{
      {"model", "imh-demo"},
      {"weights", c.weights},
      {"seed", c.seed},
      {"draws_requested", c.draws},
      {"n_draws", times.size()},
      {"horizon_exceeded", exceeded},
      {"exact", exact},
      {"empirical", empirical},
      {"tv_distance", tv},
  };
  if (!times.empty()) {
    auto bct = bct_summary(times);
    summary["bct"] = {{"mean", bct.mean}, {"min", bct.min}, {"max", bct.max}};
  }
  auto doc = json{{"summary", summary},
                  {"diagnostics", {{"wall_seconds", seconds_since(start)}, {"workers", c.workers}}}};
  auto out = Output{c.out};
  out.stream() << doc.dump(2) << '\n';
  return 0;
}

auto run_model(const Run_config& c) -> int {
  if (c.preset == "imh-demo") {
    return run_imh_demo(c);
  }
  auto start = std::chrono::steady_clock::now();
  auto model = c.config_path.empty() ? preset_model(c.preset) : load_model_config(c.config_path);
  auto name = c.config_path.empty() ? c.preset : c.config_path;
  auto outcomes = run_coupler_draws(*model, c.draws, c.seed, options_of(c), c.workers);
  auto summary = summarize(*model, name, c.seed, outcomes, c.bins);
  if (summary.horizon_exceeded > 0) {
    std::cerr << "warning: " << summary.horizon_exceeded << " of " << summary.draws_requested
              << " draws exceeded the backward horizon " << c.max_horizon << '\n';
  }
  auto doc = json{{"summary", to_json(summary)},
                  {"diagnostics", {{"wall_seconds", seconds_since(start)}, {"workers", c.workers}}}};

  if (c.format == "csv") {
    auto out = Output{c.out};
    write_draws_csv(out.stream(), *model, outcomes);
    if (!c.out.empty()) {
      auto json_out = Output{c.out + ".summary.json"};
      json_out.stream() << doc.dump(2) << '\n';
    }
  } else {
    auto out = Output{c.out};
    out.stream() << doc.dump(2) << '\n';
  }
  if (!c.hist_out.empty()) {
    auto hist = Output{c.hist_out};
    write_histogram_csv(hist.stream(), summary.effect_histogram);
    auto bct_hist = Output{c.hist_out + ".bct.csv"};
    write_histogram_csv(bct_hist.stream(), summary.bct_histogram);
  }
  return 0;
}

auto add_common(CLI::App& cmd, Run_config& c) -> void {
  cmd.add_option("--draws", c.draws, "Number of independent perfect draws")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", c.seed, "Master seed; draw i uses a seed derived from (seed, i)");
  cmd.add_option("--max-horizon", c.max_horizon, "Largest backward start time tried per draw")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--workers", c.workers, "Worker threads (results do not depend on this)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--out", c.out, "Output path (default: stdout)");
  cmd.add_option("--schedule", c.schedule, "Backward horizon schedule")
      ->check(CLI::IsMember({"linear", "doubling"}));
}

}  // namespace

int main(int argc, char** argv) {
  auto app = CLI::App{"Perfect sampling with the class coupler"};
  app.require_subcommand(1);
  auto config = Run_config{};

  auto* run = app.add_subcommand("run", "Draw from a preset or configured model");
  auto* preset = run->add_option("--preset", config.preset, "Built-in model")
                     ->check(CLI::IsMember({"sim1", "sim2", "two-sample-1", "two-sample-2", "two-sample-3",
                                            "imh-demo"}));
  auto* path = run->add_option("--config", config.config_path, "JSON model description")->check(CLI::ExistingFile);
  preset->excludes(path);
  path->excludes(preset);
  add_common(*run, config);
  run->add_option("--format", config.format, "json: summary; csv: one row per draw")
      ->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--bins", config.bins, "Histogram bins")->check(CLI::PositiveNumber);
  run->add_option("--hist-out", config.hist_out, "Write the effect histogram CSV here (BCT histogram to <path>.bct.csv)");

  auto* imh = app.add_subcommand("imh-demo", "Perfect IMH on a finite target given by weights");
  add_common(*imh, config);
  imh->add_option("--weights", config.weights, "Unnormalized target weights")->delimiter(',');
  imh->add_option("--candidate", config.candidate, "Candidate weights (default uniform)")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (config.preset.empty() && config.config_path.empty()) {
        std::cerr << "run: one of --preset or --config is required\n";
        return 2;
      }
      return run_model(config);
    }
    return run_imh_demo(config);
  } catch (const Config_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
