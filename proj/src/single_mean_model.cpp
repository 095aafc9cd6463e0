#include "classcoupler/single_mean_model.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "classcoupler/errors.h"

namespace classcoupler {

Single_mean_model::Single_mean_model(std::vector<double> data, Atom_mixture_prior prior, Variance_prior variance)
    : data_{std::move(data)}, prior_{prior}, variance_{variance} {
  if (data_.empty()) {
    throw Degenerate_data{"single-mean model needs at least one observation"};
  }
  if (const auto* known = std::get_if<Known_variance>(&variance_); known && !(known->v > 0.0 && std::isfinite(known->v))) {
    throw std::invalid_argument{"known variance must be finite and > 0"};
  }
  n_ = static_cast<double>(data_.size());
  mean_ = std::accumulate(data_.begin(), data_.end(), 0.0) / n_;
  centered_ss_ = 0.0;
  for (auto y : data_) {
    centered_ss_ += (y - mean_) * (y - mean_);
  }
  v_hat_ = centered_ss_ / n_;
  auto gap = mean_ - prior_.atom_location;
  v0_hat_ = v_hat_ + gap * gap;
  log_prior_odds_ = std::log(prior_.atom_weight) - std::log1p(-prior_.atom_weight);

  if (const auto* known = std::get_if<Known_variance>(&variance_)) {
    max_ll_free_ = log_likelihood_at(mean_, known->v);
    max_ll_atom_ = log_likelihood_at(prior_.atom_location, known->v);
    recipe_ = Deviate_recipe{
        .arity = 1,
        .draw = [slab = prior_.slab](Uniform_stream& s, std::span<double> out) { out[0] = normal_sample(s, slab); },
    };
  } else {
    if (!(v_hat_ > 0.0)) {
      throw Degenerate_data{"sample variance is 0; the class minimum of the acceptance ratio is undefined"};
    }
    max_ll_free_ = log_likelihood_at(mean_, v_hat_);
    max_ll_atom_ = log_likelihood_at(prior_.atom_location, v0_hat_);
    recipe_ = Deviate_recipe{
        .arity = 2,
        .draw = [slab = prior_.slab, ig = std::get<Inv_gamma_params>(variance_)](Uniform_stream& s,
                                                                                 std::span<double> out) {
          out[0] = normal_sample(s, slab);
          out[1] = invgamma_sample(s, ig);
        },
    };
  }
}

auto Single_mean_model::log_likelihood_at(double mu, double v) const -> double {
  if (!(v > 0.0)) {
    throw std::domain_error{"likelihood needs a variance > 0"};
  }
  auto gap = mean_ - mu;
  auto ss = centered_ss_ + n_ * gap * gap;
  return -0.5 * n_ * std::log(2.0 * std::numbers::pi * v) - 0.5 * ss / v;
}

auto Single_mean_model::log_likelihood(const Mixed_state& state) const -> double {
  check_layout(state);
  return log_likelihood_at(state.locations[0].value_or(prior_.atom_location), variance_of(state));
}

auto Single_mean_model::make_state(double mu, double v) const -> Mixed_state {
  auto state = Mixed_state{.locations = {Coord::free(mu)}};
  if (!known_variance()) {
    state.variances.push_back(v);
  }
  return state;
}

auto Single_mean_model::make_atom_state(double v) const -> Mixed_state {
  auto state = Mixed_state{.locations = {Coord::at_atom()}};
  if (!known_variance()) {
    state.variances.push_back(v);
  }
  return state;
}

auto Single_mean_model::class_of(const Mixed_state& state) const -> Class_id {
  check_layout(state);
  return state.locations[0].is_atom() ? Class_id::one : Class_id::two;
}

auto Single_mean_model::candidate_for_class(Class_id from, const Deviate_record& record) const -> Mixed_state {
  if (record.candidate_deviates.size() != recipe_.arity) {
    throw Contract_violation{"deviate record arity does not match the single-mean model"};
  }
  auto v = known_variance() ? 0.0 : record.candidate_deviates[1];
  return from == Class_id::one ? make_state(record.candidate_deviates[0], v) : make_atom_state(v);
}

auto Single_mean_model::log_accept_ratio(const Mixed_state& from, const Mixed_state& to) const -> double {
  auto from_class = class_of(from);
  if (from_class == class_of(to)) {
    throw Contract_violation{"acceptance ratio is only defined between opposite classes"};
  }
  auto odds = from_class == Class_id::two ? log_prior_odds_ : -log_prior_odds_;
  return odds + log_likelihood(to) - log_likelihood(from);
}

auto Single_mean_model::log_min_ratio_into(const Mixed_state& candidate, Class_id source) const -> double {
  if (class_of(candidate) == source) {
    throw Contract_violation{"candidate must lie outside the source class"};
  }
  return source == Class_id::two ? log_prior_odds_ + log_likelihood(candidate) - max_ll_free_
                                 : -log_prior_odds_ + log_likelihood(candidate) - max_ll_atom_;
}

auto Single_mean_model::class_one_point() const -> Mixed_state {
  if (!known_variance()) {
    throw Contract_violation{"class one is a continuum when the variance is unknown"};
  }
  return make_atom_state(0.0);
}

auto Single_mean_model::random_state(Class_id c, Uniform_stream& stream) const -> Mixed_state {
  auto mu = normal_sample(stream, prior_.slab);
  auto v = known_variance() ? 0.0 : invgamma_sample(stream, std::get<Inv_gamma_params>(variance_));
  return c == Class_id::one ? make_atom_state(v) : make_state(mu, v);
}

auto Single_mean_model::coordinate_names() const -> std::vector<std::string> {
  if (known_variance()) {
    return {"mu"};
  }
  return {"mu", "v"};
}

auto Single_mean_model::coordinates(const Mixed_state& state) const -> std::vector<double> {
  check_layout(state);
  auto out = std::vector<double>{state.locations[0].value_or(prior_.atom_location)};
  if (!known_variance()) {
    out.push_back(state.variances[0]);
  }
  return out;
}

auto Single_mean_model::variance_of(const Mixed_state& state) const -> double {
  if (const auto* known = std::get_if<Known_variance>(&variance_)) {
    return known->v;
  }
  return state.variances[0];
}

auto Single_mean_model::check_layout(const Mixed_state& state) const -> void {
  auto expected_variances = known_variance() ? 0U : 1U;
  if (state.locations.size() != 1 || state.variances.size() != expected_variances) {
    throw Contract_violation{"state layout does not match the single-mean model"};
  }
}

auto Single_mean_model::effect(const Mixed_state& state) const -> double {
  return coordinates(state)[0];
}

}  // namespace classcoupler
