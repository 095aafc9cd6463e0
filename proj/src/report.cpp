#include "classcoupler/report.h"

#include <stdexcept>
#include <vector>

namespace classcoupler {

auto summarize(const Coupler_model& model, std::string name, std::uint64_t seed,
               std::span<const Draw_outcome<Mixed_state>> outcomes, std::size_t bins) -> Run_summary {
  auto draws = std::vector<Mixed_state>{};
  auto times = std::vector<std::size_t>{};
  auto effects = std::vector<double>{};
  auto bct_values = std::vector<double>{};
  auto summary = Run_summary{.model = std::move(name), .seed = seed, .draws_requested = outcomes.size()};
  for (const auto& o : outcomes) {
    summary.mh_steps += o.mh_steps;
    if (!o.draw) {
      ++summary.horizon_exceeded;
      continue;
    }
    draws.push_back(*o.draw);
    times.push_back(o.bct);
    effects.push_back(model.effect(*o.draw));
    bct_values.push_back(static_cast<double>(o.bct));
  }
  if (draws.empty()) {
    throw std::invalid_argument{"no draw completed within the horizon"};
  }
  summary.draws_completed = draws.size();
  summary.atom_prob = atom_probability(draws);
  summary.bct = bct_summary(times);
  summary.effect_name = model.effect_name();
  summary.effect_histogram = histogram(effects, bins);
  summary.bct_histogram = histogram(bct_values, bins);
  return summary;
}

auto to_json(const Histogram& h) -> nlohmann::json {
  return {{"lo", h.lo}, {"hi", h.hi}, {"counts", h.counts}};
}

auto to_json(const Run_summary& s) -> nlohmann::json {
  auto effect = to_json(s.effect_histogram);
  effect["name"] = s.effect_name;
  return {
      {"model", s.model},
      {"seed", s.seed},
      {"draws_requested", s.draws_requested},
      {"n_draws", s.draws_completed},
      {"horizon_exceeded", s.horizon_exceeded},
      {"mh_steps", s.mh_steps},
      {"atom_prob",
       {{"estimate", s.atom_prob.estimate}, {"ci_low", s.atom_prob.ci_low}, {"ci_high", s.atom_prob.ci_high},
        {"z", k_wald_z95}}},
      {"bct", {{"mean", s.bct.mean}, {"min", s.bct.min}, {"max", s.bct.max}}},
      {"histograms", {{"effect", effect}, {"bct", to_json(s.bct_histogram)}}},
  };
}

auto write_draws_csv(std::ostream& out, const Coupler_model& model, std::span<const Draw_outcome<Mixed_state>> outcomes)
    -> void {
  auto names = model.coordinate_names();
  out << "draw_index,class";
  for (const auto& n : names) {
    out << ',' << n;
  }
  out << ",bct\n";
  auto old_precision = out.precision(17);
  for (auto i = std::size_t{0}; i != outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    out << i << ',';
    if (o.draw) {
      out << (model.class_of(*o.draw) == Class_id::one ? "null" : "alt");
      for (auto x : model.coordinates(*o.draw)) {
        out << ',' << x;
      }
    } else {
      out << "none" << std::string(names.size(), ',');
    }
    out << ',' << o.bct << '\n';
  }
  out.precision(old_precision);
}

auto write_histogram_csv(std::ostream& out, const Histogram& h) -> void {
  out << "bin_low,bin_high,count\n";
  auto old_precision = out.precision(17);
  auto width = h.bin_width();
  for (auto i = std::size_t{0}; i != h.counts.size(); ++i) {
    out << h.lo + width * static_cast<double>(i) << ',' << h.lo + width * static_cast<double>(i + 1) << ','
        << h.counts[i] << '\n';
  }
  out.precision(old_precision);
}

}  // namespace classcoupler
