#include "classcoupler/run_driver.h"

#include "classcoupler/class_coupler.h"

namespace classcoupler {

auto run_coupler_draws(const Coupler_model& model, std::size_t draws, std::uint64_t seed,
                       const Coupling_options& options, std::size_t workers)
    -> std::vector<Draw_outcome<Mixed_state>> {
  return parallel_draws(draws, workers, [&](std::size_t i) {
    auto store = Deviate_store{derive_draw_seed(seed, i)};
    try {
      auto result = couple(model, store, options);
      return Draw_outcome<Mixed_state>{.draw = std::move(result.draw), .bct = result.bct, .mh_steps = result.mh_steps};
    } catch (const Horizon_exceeded& e) {
      return Draw_outcome<Mixed_state>{.bct = e.horizon_reached(), .mh_steps = e.mh_steps()};
    }
  });
}

auto run_imh_draws(const Perfect_imh& sampler, std::size_t draws, std::uint64_t seed, const Coupling_options& options,
                   std::size_t workers) -> std::vector<Draw_outcome<double>> {
  return parallel_draws(draws, workers, [&](std::size_t i) {
    auto store = Deviate_store{derive_draw_seed(seed, i)};
    try {
      auto result = sampler.sample(store, options);
      return Draw_outcome<double>{.draw = result.draw, .bct = result.bct, .mh_steps = result.mh_steps};
    } catch (const Horizon_exceeded& e) {
      return Draw_outcome<double>{.bct = e.horizon_reached(), .mh_steps = e.mh_steps()};
    }
  });
}

}  // namespace classcoupler
