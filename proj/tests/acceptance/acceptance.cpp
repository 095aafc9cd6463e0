// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance            all criteria
//   acceptance 3 7        only criteria 3 and 7

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "classcoupler/class_coupler.h"
#include "classcoupler/estimator.h"
#include "classcoupler/model_config.h"
#include "classcoupler/perfect_imh.h"
#include "classcoupler/run_driver.h"
#include "classcoupler/single_mean_model.h"
#include "classcoupler/two_sample_model.h"
#include "oracles.h"

using namespace classcoupler;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

constexpr std::size_t k_workers = 8;

auto fmt(const char* format, auto... args) -> std::string {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

struct Run_stats {
  std::size_t draws = 0;
  std::size_t failed = 0;
  Proportion_estimate atom{};
  Bct_summary bct{};
};

auto run(const Coupler_model& model, std::size_t n, std::uint64_t seed) -> Run_stats {
  auto outcomes = run_coupler_draws(model, n, seed, {}, k_workers);
  auto draws = std::vector<Mixed_state>{};
  auto times = std::vector<std::size_t>{};
  auto stats = Run_stats{.draws = n};
  for (const auto& o : outcomes) {
    if (!o.draw) {
      ++stats.failed;
      continue;
    }
    draws.push_back(*o.draw);
    times.push_back(o.bct);
  }
  if (!draws.empty()) {
    stats.atom = atom_probability(draws);
    stats.bct = bct_summary(times);
  }
  return stats;
}

auto within(double x, double lo, double hi) -> bool { return lo <= x && x <= hi; }

auto three_se(double observed, double truth, std::size_t n) -> bool {
  return std::abs(observed - truth) <= 3.0 * std::sqrt(truth * (1.0 - truth) / static_cast<double>(n));
}

// Criteria 1 and 2 read the same 100,000-draw run.
auto simulation_one_run() -> const Run_stats& {
  static const auto stats = run(*preset_model("sim1"), 100000, 7);
  return stats;
}

// Exact atom probability of the reproduction data for an IG(1, rate) variance prior.
auto quadrature_truth(double rate) -> double {
  auto problem = oracle::Single_mean_problem{.data = simulation_one_data(), .p = 0.5, .slab_variance = 100.0};
  return oracle::atom_probability_inverse_gamma(problem, 1.0, rate);
}

const auto small_data = std::vector<double>{0.3, -0.5, 1.2, 0.8, 0.1};

auto criterion_1() -> Verdict {
  const auto& full = simulation_one_run();
  auto desk = run(*preset_model("sim1"), 20000, 8);
  auto pass = full.failed == 0 && within(full.atom.estimate, 0.859, 0.879) && desk.failed == 0 &&
              within(desk.atom.estimate, 0.854, 0.884);
  return {pass, fmt("100k draws: atom %.5f (%.5f, %.5f) in [0.859, 0.879]; 20k draws: atom %.5f in [0.854, 0.884]"
                    " (quadrature: %.5f)",
                    full.atom.estimate, full.atom.ci_low, full.atom.ci_high, desk.atom.estimate,
                    quadrature_truth(0.05))};
}

auto criterion_2() -> Verdict {
  const auto& s = simulation_one_run();
  auto pass = s.failed == 0 && within(s.bct.mean, 1250, 1750) && s.bct.min <= 20 && s.bct.max >= 4000;
  return {pass, fmt("mean BCT %.1f in [1250, 1750], min %zu <= 20, max %zu >= 4000", s.bct.mean, s.bct.min, s.bct.max)};
}

// "Max on the order of 1,500" pinned to [490, 4500]: within a factor of three.
auto criterion_3() -> Verdict {
  auto model = preset_model("sim2");
  auto s = run(*model, 100000, 7);
  auto pass = s.failed == 0 && within(s.atom.estimate, 0.868, 0.889) && within(s.bct.mean, 125, 180) &&
              within(static_cast<double>(s.bct.max), 490, 4500);
  return {pass, fmt("atom %.5f in [0.868, 0.889] (quadrature: %.5f), mean BCT %.2f in [125, 180], min %zu, max %zu in "
                    "[490, 4500]",
                    s.atom.estimate, quadrature_truth(1.0), s.bct.mean, s.bct.min, s.bct.max)};
}

auto criterion_4() -> Verdict {
  auto problem = oracle::Single_mean_problem{.data = small_data, .p = 0.5, .slab_variance = 4.0};
  auto v = 0.7;
  auto model = Single_mean_model{problem.data, Atom_mixture_prior{0.5, 0.0, {0.0, 4.0}}, Known_variance{v}};
  auto truth = oracle::atom_probability_known_variance(problem, v);
  auto n = std::size_t{50000};
  auto s = run(model, n, 404);
  return {s.failed == 0 && three_se(s.atom.estimate, truth, n),
          fmt("closed form %.5f, sampler %.5f over %zu draws, |diff| %.5f <= 3 SE %.5f", truth, s.atom.estimate, n,
              std::abs(s.atom.estimate - truth), 3.0 * std::sqrt(truth * (1 - truth) / n))};
}

auto criterion_5() -> Verdict {
  auto problem = oracle::Single_mean_problem{.data = small_data, .p = 0.5, .slab_variance = 4.0};
  auto model = Single_mean_model{problem.data, Atom_mixture_prior{0.5, 0.0, {0.0, 4.0}}, Inv_gamma_params{1.0, 1.0}};
  auto truth = oracle::atom_probability_inverse_gamma(problem, 1.0, 1.0);
  auto n = std::size_t{50000};
  auto s = run(model, n, 505);
  return {s.failed == 0 && three_se(s.atom.estimate, truth, n),
          fmt("quadrature %.5f, sampler %.5f over %zu draws, |diff| %.5f <= 3 SE %.5f", truth, s.atom.estimate, n,
              std::abs(s.atom.estimate - truth), 3.0 * std::sqrt(truth * (1 - truth) / n))};
}

auto criterion_6() -> Verdict {
  auto h = std::vector<double>{1, 2, 3, 4, 5};
  auto sampler = Perfect_imh{discrete_imh_target(h)};
  auto outcomes = run_imh_draws(sampler, 100000, 606, {}, k_workers);
  auto counts = std::vector<double>(h.size(), 0.0);
  for (const auto& o : outcomes) {
    counts[static_cast<std::size_t>(*o.draw)] += 1.0;
  }
  auto tv = 0.0;
  for (auto i = std::size_t{0}; i != h.size(); ++i) {
    tv += 0.5 * std::abs(counts[i] / 100000.0 - h[i] / 15.0);
  }
  return {tv < 0.01, fmt("TV distance %.5f < 0.01 over 100000 draws", tv)};
}

// Every model family and both coupling routes; 100 draws each, 50 starts per draw.
auto criterion_7() -> Verdict {
  auto checked = std::size_t{0};
  auto failures = std::size_t{0};
  auto funnel = [&](const Coupler_model& model, std::uint64_t seed) {
    for (auto i = std::uint64_t{0}; i != 100; ++i) {
      auto store = Deviate_store{derive_draw_seed(seed, i)};
      auto result = couple(model, store);
      auto starts = Uniform_stream::keyed(seed, i);
      for (auto k = 0; k != 50; ++k) {
        auto start = model.random_state(k % 2 == 0 ? Class_id::one : Class_id::two, starts);
        ++checked;
        failures += forward_from(model, store, start, result.bct) == result.draw ? 0 : 1;
      }
    }
  };
  funnel(*preset_model("sim1"), 71);
  funnel(*preset_model("sim2"), 72);
  funnel(*preset_model("two-sample-1"), 73);
  funnel(*preset_model("two-sample-2"), 74);
  funnel(*preset_model("two-sample-3"), 75);
  funnel(Single_mean_model{small_data, Atom_mixture_prior{0.5, 0.0, {0.0, 4.0}}, Known_variance{0.7}}, 76);

  auto sampler = Perfect_imh{discrete_imh_target({1, 2, 3, 4, 5})};
  for (auto i = std::uint64_t{0}; i != 100; ++i) {
    auto store = Deviate_store{derive_draw_seed(77, i)};
    auto result = sampler.sample(store);
    auto starts = Uniform_stream::keyed(77, i);
    for (auto k = 0; k != 50; ++k) {
      ++checked;
      auto start = static_cast<double>(static_cast<int>(5.0 * starts.uniform01()));
      failures += sampler.forward(store, start, result.bct) == result.draw ? 0 : 1;
    }
  }
  return {failures == 0, fmt("%zu of %zu forward runs from the coupling horizon missed the draw (7 targets)", failures,
                             checked)};
}

auto criterion_8() -> Verdict {
  auto mismatches = std::size_t{0};
  auto compared = std::size_t{0};
  for (const auto* name : {"sim1", "sim2", "two-sample-3"}) {
    auto model = preset_model(name);
    auto one = run_coupler_draws(*model, 1000, 88, {}, 1);
    auto eight = run_coupler_draws(*model, 1000, 88, {}, 8);
    auto again = run_coupler_draws(*model, 1000, 88, {}, 8);
    for (auto i = std::size_t{0}; i != one.size(); ++i) {
      ++compared;
      mismatches += (one[i] == eight[i] && eight[i] == again[i]) ? 0 : 1;
    }
  }
  auto sampler = Perfect_imh{discrete_imh_target({1, 2, 3, 4, 5})};
  auto imh_one = run_imh_draws(sampler, 5000, 89, {}, 1);
  auto imh_eight = run_imh_draws(sampler, 5000, 89, {}, 8);
  compared += imh_one.size();
  for (auto i = std::size_t{0}; i != imh_one.size(); ++i) {
    mismatches += imh_one[i] == imh_eight[i] ? 0 : 1;
  }
  return {mismatches == 0, fmt("%zu of %zu per-draw outcomes differ between workers = 1 and workers = 8", mismatches,
                               compared)};
}

auto log_npdf(double x, double m, double s2) -> double {
  return -0.5 * std::log(2.0 * std::numbers::pi * s2) - 0.5 * (x - m) * (x - m) / s2;
}

auto log_igpdf(double v, double a, double b) -> double {
  return a * std::log(b) - std::lgamma(a) - (a + 1.0) * std::log(v) - b / v;
}

auto direct_loglik(const std::vector<double>& y, double mu, double v) -> double {
  auto total = 0.0;
  for (auto x : y) {
    total += log_npdf(x, mu, v);
  }
  return total;
}

auto criterion_9() -> Verdict {
  auto worst = 0.0;
  auto pairs = std::size_t{0};
  auto record = [&](double simplified, double full) {
    ++pairs;
    worst = std::max(worst, std::abs(simplified - full) / std::max(1.0, std::abs(full)));
  };

  // Single mean, sim1 hyperparameters.
  auto data = simulation_one_data();
  auto single = Single_mean_model{data, Atom_mixture_prior{0.5, 0.0, {0.0, 100.0}}, Inv_gamma_params{1.0, 0.05}};
  auto stream = Uniform_stream{909};
  for (auto i = 0; i != 1000; ++i) {
    auto mu = normal_sample(stream, {0.0, 100.0});
    auto v = invgamma_sample(stream, {1.0, 0.05});
    auto w = invgamma_sample(stream, {1.0, 0.05});
    auto log_pi_free = std::log(0.5) + log_npdf(mu, 0.0, 100.0) + log_igpdf(v, 1.0, 0.05) + direct_loglik(data, mu, v);
    auto log_pi_atom = std::log(0.5) + log_igpdf(w, 1.0, 0.05) + direct_loglik(data, 0.0, w);
    auto full = log_pi_atom + log_npdf(mu, 0.0, 100.0) + log_igpdf(v, 1.0, 0.05) - log_pi_free - log_igpdf(w, 1.0, 0.05);
    record(single.log_accept_ratio(single.make_state(mu, v), single.make_atom_state(w)), full);
  }

  // Two samples, separate variances.
  auto g1 = std::vector<double>{0.42, 1.31, -0.27, 0.85, 1.96, 0.12};
  auto g2 = std::vector<double>{1.48, 2.03, 0.91, 2.77, 1.25, 1.69};
  auto pair = Two_sample_model{g1, g2, 0.5, 4.0, 4.0, two_sample::Separate_variances{{2.0, 1.0}, {2.0, 1.0}}};
  for (auto i = 0; i != 1000; ++i) {
    auto mu1 = normal_sample(stream, {0.0, 4.0});
    auto mu2 = normal_sample(stream, {0.0, 4.0});
    auto m = normal_sample(stream, {0.0, 4.0});
    auto v = std::array{invgamma_sample(stream, {2.0, 1.0}), invgamma_sample(stream, {2.0, 1.0})};
    auto w = std::array{invgamma_sample(stream, {2.0, 1.0}), invgamma_sample(stream, {2.0, 1.0})};
    auto q_alt = log_npdf(mu1, 0.0, 4.0) + log_npdf(mu2, 0.0, 4.0) + log_igpdf(v[0], 2.0, 1.0) + log_igpdf(v[1], 2.0, 1.0);
    auto q_null = log_npdf(m, 0.0, 4.0) + log_igpdf(w[0], 2.0, 1.0) + log_igpdf(w[1], 2.0, 1.0);
    auto log_pi_alt = std::log(0.5) + q_alt + direct_loglik(g1, mu1, v[0]) + direct_loglik(g2, mu2, v[1]);
    auto log_pi_null = std::log(0.5) + q_null + direct_loglik(g1, m, w[0]) + direct_loglik(g2, m, w[1]);
    auto full = log_pi_null + q_alt - log_pi_alt - q_null;
    record(pair.log_accept_ratio(pair.make_state(mu1, mu2, v), pair.make_null_state(m, w)), full);
  }

  auto probes = std::size_t{0};
  auto violations = std::size_t{0};
  for (const auto& name : preset_names()) {
    auto report = probe_min_ratio_dominance(*preset_model(name), 5000, 99);
    probes += report.checked;
    violations += report.violations;
  }
  auto known = Single_mean_model{small_data, Atom_mixture_prior{0.5, 0.0, {0.0, 4.0}}, Known_variance{0.7}};
  auto report = probe_min_ratio_dominance(known, 5000, 98);
  probes += report.checked;
  violations += report.violations;

  return {worst <= 1e-10 && violations == 0,
          fmt("%zu ratio pairs, worst relative gap %.2e <= 1e-10; %zu of %zu dominance probes violated", pairs, worst,
              violations, probes)};
}

auto criterion_10() -> Verdict {
  using namespace two_sample;
  auto g1 = std::vector<double>{0.0, 2.0};
  auto g2 = std::vector<double>{1.0, 3.0};
  auto c1 = Two_sample_model{g1, g2, 0.5, 1.0, 1.0, Known_variances{0.5, 0.5}};
  auto c2 = Two_sample_model{g1, g2, 0.5, 1.0, 1.0, Common_variance{{1.0, 1.0}}};
  auto c3 = Two_sample_model{g1, g2, 0.5, 1.0, 1.0, Separate_variances{{1.0, 1.0}, {1.0, 1.0}}};
  // By hand: group means 1 and 2, pooled mean 1.5; residuals about the group
  // means are +-1, about the pooled mean -1.5, 0.5 and -0.5, 1.5.
  auto mle_ok = c1.mle().mu0_hat == 1.5 && c1.mle().mu_hat == std::array{1.0, 2.0} &&
                c2.mle().mu0_hat == 1.5 && c2.mle().v0_hat == std::vector{1.25} && c2.mle().v_hat == std::vector{1.0} &&
                c3.mle().mu0_hat == 1.5 && c3.mle().v0_hat == std::vector{1.25, 1.25} &&
                c3.mle().v_hat == std::vector{1.0, 1.0};

  auto problem = oracle::Two_sample_problem{
      .group1 = {0.42, 1.31, -0.27, 0.85}, .group2 = {1.48, 2.03, 0.91, 2.77}, .p = 0.5, .sigma1_sq = 1.0, .sigma2_sq = 1.0};
  auto model = Two_sample_model{problem.group1, problem.group2, problem.p, problem.sigma1_sq, problem.sigma2_sq,
                                Common_variance{{1.0, 1.0}}};
  auto truth = oracle::atom_probability_two_sample_common(problem, 1.0, 1.0);
  auto n = std::size_t{30000};
  auto s = run(model, n, 1010);
  return {mle_ok && s.failed == 0 && three_se(s.atom.estimate, truth, n),
          fmt("hand-arithmetic MLEs %s; case 2 quadrature %.5f, sampler %.5f over %zu draws, |diff| %.5f <= 3 SE %.5f",
              mle_ok ? "match" : "MISMATCH", truth, s.atom.estimate, n, std::abs(s.atom.estimate - truth),
              3.0 * std::sqrt(truth * (1 - truth) / n))};
}

}  // namespace

int main(int argc, char** argv) {
  auto criteria = std::vector<std::function<Verdict()>>{criterion_1, criterion_2, criterion_3, criterion_4,
                                                        criterion_5, criterion_6, criterion_7, criterion_8,
                                                        criterion_9, criterion_10};
  auto selected = std::set<std::size_t>{};
  for (auto i = 1; i < argc; ++i) {
    selected.insert(std::strtoul(argv[i], nullptr, 10));
  }
  auto failed = 0;
  for (auto i = std::size_t{0}; i != criteria.size(); ++i) {
    if (!selected.empty() && !selected.contains(i + 1)) {
      continue;
    }
    auto start = std::chrono::steady_clock::now();
    auto verdict = criteria[i]();
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %s  %s  [%.1fs]\n", i + 1, verdict.pass ? "PASS" : "FAIL", verdict.detail.c_str(),
                seconds);
    std::fflush(stdout);
    failed += verdict.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
