#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "classcoupler/coupler_model.h"
#include "classcoupler/distributions.h"

namespace classcoupler {

namespace two_sample {

struct Known_variances {
  double v1;
  double v2;
};

struct Common_variance {
  Inv_gamma_params prior;
};

struct Separate_variances {
  Inv_gamma_params prior1;
  Inv_gamma_params prior2;
};

using Variance_case = std::variant<Known_variances, Common_variance, Separate_variances>;

// Closed-form estimates for the null (mu1 = mu2) and the full model.
// mu0_hat is the common mean under the null; v0_hat and v_hat have one entry
// for a common variance, two for separate variances, none for known variances.
struct Mle_set {
  double mu0_hat;
  std::array<double, 2> mu_hat;
  std::vector<double> v0_hat;
  std::vector<double> v_hat;
};

// How the class-one minimizer used by the sampler was obtained.
enum class Minimizer_source {
  closed_form,
  profile_search,  // numeric maximization of the profile likelihood in the common mean
};

}  // namespace two_sample

// y_ij = mu_i + e_ij, e_ij ~ N(0, v_i), i = 1, 2, testing mu1 = mu2 with the prior
//   p * delta(mu1 - mu2) * N(mu1; 0, sigma1_sq) + (1 - p) * N(mu1; 0, sigma2_sq) N(mu2; 0, sigma2_sq).
//
// State layout: locations = {mu1, mu2}; in class one mu2 carries the atom tag,
// meaning mu2 = mu1. variances = {} (known), {v} (common) or {v1, v2} (separate).
// Candidates: class one states receive (N1, N2) from the second prior component;
// class two states receive (M, M) from the first. Variance candidates come from
// the variance priors and are shared by both classes at a step. Per-step
// deviates are laid out as [N1, N2, M, S...].
class Two_sample_model final : public Coupler_model {
 public:
  // Throws Degenerate_data for an empty group or a zero variance MLE where the
  // variances are unknown.
  Two_sample_model(std::vector<double> group1, std::vector<double> group2, double atom_weight, double sigma1_sq,
                   double sigma2_sq, two_sample::Variance_case variances);

  auto group1() const -> const std::vector<double>& { return group1_; }
  auto group2() const -> const std::vector<double>& { return group2_; }
  auto variance_case() const -> const two_sample::Variance_case& { return variances_; }

  // Closed-form estimates per variance case.
  auto mle() const -> const two_sample::Mle_set& { return mle_; }
  // Null-model maximizer actually used for the class-one minimum.
  auto restricted_maximizer() const -> const Mixed_state& { return restricted_max_; }
  auto restricted_maximizer_source() const -> two_sample::Minimizer_source { return restricted_source_; }

  auto log_likelihood(const Mixed_state& state) const -> double;
  auto log_likelihood_at(double mu1, double mu2, double v1, double v2) const -> double;

  auto make_state(double mu1, double mu2, std::span<const double> variances) const -> Mixed_state;
  auto make_null_state(double mu, std::span<const double> variances) const -> Mixed_state;
  auto variance_count() const -> std::size_t;

  auto deviate_recipe() const -> const Deviate_recipe& override { return recipe_; }
  auto class_of(const Mixed_state& state) const -> Class_id override;
  auto candidate_for_class(Class_id from, const Deviate_record& record) const -> Mixed_state override;
  auto log_accept_ratio(const Mixed_state& from, const Mixed_state& to) const -> double override;
  auto log_min_ratio_into(const Mixed_state& candidate, Class_id source) const -> double override;
  auto class_one_is_singleton() const -> bool override { return false; }
  auto class_one_point() const -> Mixed_state override;
  auto random_state(Class_id c, Uniform_stream& stream) const -> Mixed_state override;
  auto coordinate_names() const -> std::vector<std::string> override;
  auto coordinates(const Mixed_state& state) const -> std::vector<double> override;
  auto effect_name() const -> std::string override { return "mu1-mu2"; }
  auto effect(const Mixed_state& state) const -> double override;

 private:
  struct Group_stats {
    double n;
    double mean;
    double centered_ss;
  };

  auto check_layout(const Mixed_state& state) const -> void;
  auto variance_pair(const Mixed_state& state) const -> std::array<double, 2>;
  auto draw_variances(Uniform_stream& stream, std::span<double> out) const -> void;
  static auto draw_variance_deviates(const two_sample::Variance_case& variances, Uniform_stream& stream,
                                     std::span<double> out) -> void;

  std::vector<double> group1_;
  std::vector<double> group2_;
  double atom_weight_;
  Normal_params null_slab_;
  Normal_params alt_slab_;
  two_sample::Variance_case variances_;
  std::array<Group_stats, 2> stats_;
  two_sample::Mle_set mle_;
  Mixed_state restricted_max_;
  two_sample::Minimizer_source restricted_source_ = two_sample::Minimizer_source::closed_form;
  double log_prior_odds_;
  double max_ll_free_;
  double max_ll_null_;
  Deviate_recipe recipe_;
};

}  // namespace classcoupler
