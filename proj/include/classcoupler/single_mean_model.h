#pragma once

#include <string>
#include <variant>
#include <vector>

#include "classcoupler/coupler_model.h"
#include "classcoupler/distributions.h"

namespace classcoupler {

struct Known_variance {
  double v;
};

using Variance_prior = std::variant<Known_variance, Inv_gamma_params>;

// y_j = mu + e_j, e_j ~ N(0, v), with mu ~ p * delta_{theta0} + (1 - p) * N(slab)
// and v either known or inverse gamma.
//
// State layout: locations = {mu} (atom tag when mu = theta0); variances = {v}
// when v is unknown, empty otherwise. Class one is {mu = theta0}; with a known
// variance it is a single point and the scalar single-atom coupler applies.
//
// The candidate offered to the atom is drawn from the slab and the variance
// candidate from the variance prior, so the prior and candidate densities cancel
// in r and only prior odds times a likelihood ratio remain:
//   free -> atom: log(p/(1-p)) + ll(theta0, v') - ll(mu, v)
//   atom -> free: log((1-p)/p) + ll(mu', v') - ll(theta0, v)
// Class minima sit at the unrestricted MLE (ybar, vhat) and at the restricted
// MLE (theta0, vhat0) with vhat0 = mean (y - theta0)^2 = vhat + (ybar - theta0)^2.
class Single_mean_model final : public Coupler_model {
 public:
  // Throws Degenerate_data for empty data, or when v is unknown and the sample
  // variance is 0 (the likelihood is then unbounded near the MLE).
  Single_mean_model(std::vector<double> data, Atom_mixture_prior prior, Variance_prior variance);

  auto data() const -> const std::vector<double>& { return data_; }
  auto prior() const -> const Atom_mixture_prior& { return prior_; }
  auto variance_prior() const -> const Variance_prior& { return variance_; }
  auto known_variance() const -> bool { return std::holds_alternative<Known_variance>(variance_); }

  auto mu_hat() const -> double { return mean_; }
  // Unrestricted and restricted variance MLEs; zero-width placeholders when v is known.
  auto v_hat() const -> double { return v_hat_; }
  auto v0_hat() const -> double { return v0_hat_; }

  // Sum over observations of log N(y_j; mu, v). Throws std::domain_error for v <= 0.
  auto log_likelihood(const Mixed_state& state) const -> double;
  auto log_likelihood_at(double mu, double v) const -> double;

  auto make_state(double mu, double v) const -> Mixed_state;
  auto make_atom_state(double v) const -> Mixed_state;

  auto deviate_recipe() const -> const Deviate_recipe& override { return recipe_; }
  auto class_of(const Mixed_state& state) const -> Class_id override;
  auto candidate_for_class(Class_id from, const Deviate_record& record) const -> Mixed_state override;
  auto log_accept_ratio(const Mixed_state& from, const Mixed_state& to) const -> double override;
  auto log_min_ratio_into(const Mixed_state& candidate, Class_id source) const -> double override;
  auto class_one_is_singleton() const -> bool override { return known_variance(); }
  auto class_one_point() const -> Mixed_state override;
  auto random_state(Class_id c, Uniform_stream& stream) const -> Mixed_state override;
  auto coordinate_names() const -> std::vector<std::string> override;
  auto coordinates(const Mixed_state& state) const -> std::vector<double> override;
  auto effect_name() const -> std::string override { return "mu"; }
  auto effect(const Mixed_state& state) const -> double override;

 private:
  auto variance_of(const Mixed_state& state) const -> double;
  auto check_layout(const Mixed_state& state) const -> void;

  std::vector<double> data_;
  Atom_mixture_prior prior_;
  Variance_prior variance_;
  double n_;
  double mean_;
  double centered_ss_;  // sum (y - ybar)^2
  double v_hat_;
  double v0_hat_;
  double log_prior_odds_;  // log(p / (1 - p))
  double max_ll_free_;     // sup of the likelihood over class two
  double max_ll_atom_;     // max of the likelihood over class one
  Deviate_recipe recipe_;
};

}  // namespace classcoupler
