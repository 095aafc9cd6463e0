#include "classcoupler/coupler_model.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace classcoupler {

auto probe_min_ratio_dominance(const Coupler_model& model, std::size_t probes, std::uint64_t seed)
    -> Dominance_report {
  auto report = Dominance_report{.worst_margin = std::numeric_limits<double>::infinity()};
  auto store = Deviate_store{seed};
  auto stream = Uniform_stream::keyed(seed, 0xd0d0);
  for (auto i = std::size_t{0}; i != probes; ++i) {
    const auto& record = store.get_or_generate(i + 1, model.deviate_recipe());
    for (auto source : {Class_id::one, Class_id::two}) {
      auto x = model.random_state(source, stream);
      auto candidate = model.candidate_for_class(source, record);
      auto bound = model.log_min_ratio_into(candidate, source);
      auto actual = model.log_accept_ratio(x, candidate);
      auto margin = actual - bound;
      // Rounding slack for log-likelihood differences of large magnitude.
      auto slack = 1e-12 * std::max({1.0, std::abs(actual), std::abs(bound)});
      ++report.checked;
      if (margin < -slack) {
        ++report.violations;
      }
      report.worst_margin = std::min(report.worst_margin, margin);
    }
  }
  return report;
}

}  // namespace classcoupler
