#include "classcoupler/two_sample_model.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "classcoupler/errors.h"

namespace classcoupler {

using namespace two_sample;

namespace {

auto validate_group(const std::vector<double>& g, const char* name) -> void {
  if (g.empty()) {
    throw Degenerate_data{std::string{"two-sample model: "} + name + " is empty"};
  }
  for (auto y : g) {
    if (!std::isfinite(y)) {
      throw std::invalid_argument{std::string{"two-sample model: "} + name + " holds a non-finite value"};
    }
  }
}

template <typename Stats>
auto group_stats(const std::vector<double>& g) -> Stats {
  auto n = static_cast<double>(g.size());
  auto mean = std::accumulate(g.begin(), g.end(), 0.0) / n;
  auto ss = 0.0;
  for (auto y : g) {
    ss += (y - mean) * (y - mean);
  }
  return Stats{n, mean, ss};
}

}  // namespace

Two_sample_model::Two_sample_model(std::vector<double> group1, std::vector<double> group2, double atom_weight,
                                   double sigma1_sq, double sigma2_sq, Variance_case variances)
    : group1_{std::move(group1)},
      group2_{std::move(group2)},
      atom_weight_{atom_weight},
      null_slab_{0.0, sigma1_sq},
      alt_slab_{0.0, sigma2_sq},
      variances_{variances} {
  validate_group(group1_, "group 1");
  validate_group(group2_, "group 2");
  if (!(atom_weight_ > 0.0 && atom_weight_ < 1.0)) {
    throw std::invalid_argument{"two-sample model: atom weight must lie in (0, 1)"};
  }
  if (const auto* known = std::get_if<Known_variances>(&variances_);
      known && !(known->v1 > 0.0 && known->v2 > 0.0 && std::isfinite(known->v1) && std::isfinite(known->v2))) {
    throw std::invalid_argument{"two-sample model: known variances must be finite and > 0"};
  }

  stats_ = {group_stats<Group_stats>(group1_), group_stats<Group_stats>(group2_)};
  const auto& [s1, s2] = stats_;
  auto total = s1.n + s2.n;
  auto pooled_mean = (s1.n * s1.mean + s2.n * s2.mean) / total;
  // Sum of squares of a group about an arbitrary centre m.
  auto ss_about = [](const Group_stats& s, double m) { return s.centered_ss + s.n * (s.mean - m) * (s.mean - m); };

  mle_.mu_hat = {s1.mean, s2.mean};
  log_prior_odds_ = std::log(atom_weight_) - std::log1p(-atom_weight_);

  if (const auto* known = std::get_if<Known_variances>(&variances_)) {
    // Precision-weighted; reduces to the pooled mean when v1 = v2.
    auto w1 = s1.n / known->v1;
    auto w2 = s2.n / known->v2;
    mle_.mu0_hat = (w1 * s1.mean + w2 * s2.mean) / (w1 + w2);
    restricted_max_ = make_null_state(mle_.mu0_hat, {});
    max_ll_free_ = log_likelihood_at(s1.mean, s2.mean, known->v1, known->v2);
  } else if (std::holds_alternative<Common_variance>(variances_)) {
    mle_.mu0_hat = pooled_mean;
    mle_.v0_hat = {(ss_about(s1, pooled_mean) + ss_about(s2, pooled_mean)) / total};
    mle_.v_hat = {(s1.centered_ss + s2.centered_ss) / total};
    if (!(mle_.v_hat[0] > 0.0)) {
      throw Degenerate_data{"two-sample model: pooled within-group variance is 0"};
    }
    restricted_max_ = make_null_state(mle_.mu0_hat, mle_.v0_hat);
    max_ll_free_ = log_likelihood_at(s1.mean, s2.mean, mle_.v_hat[0], mle_.v_hat[0]);
  } else {
    mle_.mu0_hat = pooled_mean;
    mle_.v0_hat = {ss_about(s1, pooled_mean) / s1.n, ss_about(s2, pooled_mean) / s2.n};
    mle_.v_hat = {s1.centered_ss / s1.n, s2.centered_ss / s2.n};
    if (!(mle_.v_hat[0] > 0.0 && mle_.v_hat[1] > 0.0)) {
      throw Degenerate_data{"two-sample model: a within-group variance is 0"};
    }
    max_ll_free_ = log_likelihood_at(s1.mean, s2.mean, mle_.v_hat[0], mle_.v_hat[1]);

    // With a common mean and separate variances the null MLE solves a cubic in
    // the mean; the pooled-mean formula is exact only in symmetric cases. Profile
    // out the variances and maximize over the common mean between the group means.
    auto profile = [&](double m) {
      return log_likelihood_at(m, m, ss_about(s1, m) / s1.n, ss_about(s2, m) / s2.n);
    };
    auto lo = std::min(s1.mean, s2.mean);
    auto hi = std::max(s1.mean, s2.mean);
    auto best_m = pooled_mean;
    if (hi > lo) {
      constexpr auto grid = 4096;
      auto step = (hi - lo) / grid;
      auto best_i = 0;
      auto best_value = profile(lo);
      for (auto i = 1; i <= grid; ++i) {
        auto value = profile(lo + i * step);
        if (value > best_value) {
          best_value = value;
          best_i = i;
        }
      }
      auto a = lo + std::max(best_i - 1, 0) * step;
      auto b = std::min(lo + (best_i + 1) * step, hi);
      auto [m, neg] = boost::math::tools::brent_find_minima([&](double x) { return -profile(x); }, a, b, 52);
      best_m = -neg >= best_value ? m : lo + best_i * step;
    }
    auto printed = profile(pooled_mean);
    auto searched = profile(best_m);
    if (searched > printed + 1e-12 * std::max(1.0, std::abs(printed))) {
      restricted_source_ = Minimizer_source::profile_search;
      auto v0 = std::array{ss_about(s1, best_m) / s1.n, ss_about(s2, best_m) / s2.n};
      restricted_max_ = make_null_state(best_m, v0);
    } else {
      restricted_max_ = make_null_state(pooled_mean, mle_.v0_hat);
    }
  }
  max_ll_null_ = log_likelihood(restricted_max_);

  auto extra = variance_count();
  recipe_ = Deviate_recipe{
      .arity = 3 + extra,
      .draw = [alt = alt_slab_, null = null_slab_, cases = variances_](Uniform_stream& s, std::span<double> out) {
        out[0] = normal_sample(s, alt);
        out[1] = normal_sample(s, alt);
        out[2] = normal_sample(s, null);
        draw_variance_deviates(cases, s, out.subspan(3));
      },
  };
}

auto Two_sample_model::variance_count() const -> std::size_t {
  if (std::holds_alternative<Known_variances>(variances_)) {
    return 0;
  }
  return std::holds_alternative<Common_variance>(variances_) ? 1 : 2;
}

auto Two_sample_model::draw_variances(Uniform_stream& stream, std::span<double> out) const -> void {
  draw_variance_deviates(variances_, stream, out);
}

auto Two_sample_model::draw_variance_deviates(const Variance_case& variances, Uniform_stream& stream,
                                              std::span<double> out) -> void {
  if (const auto* common = std::get_if<Common_variance>(&variances)) {
    out[0] = invgamma_sample(stream, common->prior);
  } else if (const auto* separate = std::get_if<Separate_variances>(&variances)) {
    out[0] = invgamma_sample(stream, separate->prior1);
    out[1] = invgamma_sample(stream, separate->prior2);
  }
}

auto Two_sample_model::log_likelihood_at(double mu1, double mu2, double v1, double v2) const -> double {
  if (!(v1 > 0.0) || !(v2 > 0.0)) {
    throw std::domain_error{"likelihood needs variances > 0"};
  }
  auto group = [](const Group_stats& s, double mu, double v) {
    auto gap = s.mean - mu;
    return -0.5 * s.n * std::log(2.0 * std::numbers::pi * v) - 0.5 * (s.centered_ss + s.n * gap * gap) / v;
  };
  return group(stats_[0], mu1, v1) + group(stats_[1], mu2, v2);
}

auto Two_sample_model::log_likelihood(const Mixed_state& state) const -> double {
  check_layout(state);
  auto mu1 = state.locations[0].value_or(0.0);
  auto mu2 = state.locations[1].value_or(mu1);
  auto [v1, v2] = variance_pair(state);
  return log_likelihood_at(mu1, mu2, v1, v2);
}

auto Two_sample_model::make_state(double mu1, double mu2, std::span<const double> variances) const -> Mixed_state {
  auto state = Mixed_state{.locations = {Coord::free(mu1), Coord::free(mu2)}};
  state.variances.assign(variances.begin(), variances.end());
  return state;
}

auto Two_sample_model::make_null_state(double mu, std::span<const double> variances) const -> Mixed_state {
  auto state = Mixed_state{.locations = {Coord::free(mu), Coord::at_atom()}};
  state.variances.assign(variances.begin(), variances.end());
  return state;
}

auto Two_sample_model::class_of(const Mixed_state& state) const -> Class_id {
  check_layout(state);
  return state.locations[1].is_atom() ? Class_id::one : Class_id::two;
}

auto Two_sample_model::candidate_for_class(Class_id from, const Deviate_record& record) const -> Mixed_state {
  if (record.candidate_deviates.size() != recipe_.arity) {
    throw Contract_violation{"deviate record arity does not match the two-sample model"};
  }
  auto variances = std::span<const double>{record.candidate_deviates.data() + 3, variance_count()};
  const auto& d = record.candidate_deviates;
  return from == Class_id::one ? make_state(d[0], d[1], variances) : make_null_state(d[2], variances);
}

auto Two_sample_model::log_accept_ratio(const Mixed_state& from, const Mixed_state& to) const -> double {
  auto from_class = class_of(from);
  if (from_class == class_of(to)) {
    throw Contract_violation{"acceptance ratio is only defined between opposite classes"};
  }
  auto odds = from_class == Class_id::two ? log_prior_odds_ : -log_prior_odds_;
  return odds + log_likelihood(to) - log_likelihood(from);
}

auto Two_sample_model::log_min_ratio_into(const Mixed_state& candidate, Class_id source) const -> double {
  if (class_of(candidate) == source) {
    throw Contract_violation{"candidate must lie outside the source class"};
  }
  return source == Class_id::two ? log_prior_odds_ + log_likelihood(candidate) - max_ll_free_
                                 : -log_prior_odds_ + log_likelihood(candidate) - max_ll_null_;
}

auto Two_sample_model::class_one_point() const -> Mixed_state {
  throw Contract_violation{"class one of the two-sample model is a continuum"};
}

auto Two_sample_model::random_state(Class_id c, Uniform_stream& stream) const -> Mixed_state {
  auto d = std::array<double, 5>{};
  d[0] = normal_sample(stream, alt_slab_);
  d[1] = normal_sample(stream, alt_slab_);
  d[2] = normal_sample(stream, null_slab_);
  auto variances = std::span<double>{d.data() + 3, variance_count()};
  draw_variances(stream, variances);
  return c == Class_id::two ? make_state(d[0], d[1], variances) : make_null_state(d[2], variances);
}

auto Two_sample_model::coordinate_names() const -> std::vector<std::string> {
  auto names = std::vector<std::string>{"mu1", "mu2"};
  switch (variance_count()) {
    case 1: names.emplace_back("v"); break;
    case 2: names.emplace_back("v1"); names.emplace_back("v2"); break;
    default: break;
  }
  return names;
}

auto Two_sample_model::coordinates(const Mixed_state& state) const -> std::vector<double> {
  check_layout(state);
  auto mu1 = state.locations[0].value_or(0.0);
  auto out = std::vector<double>{mu1, state.locations[1].value_or(mu1)};
  out.insert(out.end(), state.variances.begin(), state.variances.end());
  return out;
}

auto Two_sample_model::variance_pair(const Mixed_state& state) const -> std::array<double, 2> {
  if (const auto* known = std::get_if<Known_variances>(&variances_)) {
    return {known->v1, known->v2};
  }
  if (state.variances.size() == 1) {
    return {state.variances[0], state.variances[0]};
  }
  return {state.variances[0], state.variances[1]};
}

auto Two_sample_model::check_layout(const Mixed_state& state) const -> void {
  if (state.locations.size() != 2 || state.locations[0].is_atom() || state.variances.size() != variance_count()) {
    throw Contract_violation{"state layout does not match the two-sample model"};
  }
}

auto Two_sample_model::effect(const Mixed_state& state) const -> double {
  auto c = coordinates(state);
  return c[0] - c[1];
}

}  // namespace classcoupler
