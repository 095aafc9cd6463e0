#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "classcoupler/estimator.h"
#include "classcoupler/random_stream.h"

using namespace classcoupler;

namespace {

auto draws_with_atoms(std::size_t atoms, std::size_t n) -> std::vector<Mixed_state> {
  auto out = std::vector<Mixed_state>{};
  for (auto i = std::size_t{0}; i != n; ++i) {
    out.push_back({.locations = {i < atoms ? Coord::at_atom() : Coord::free(0.0)}});
  }
  return out;
}

}  // namespace

TEST(Estimator, WaldIntervalHandValue) {
  auto e = wald_interval(86907, 100000);
  EXPECT_DOUBLE_EQ(e.estimate, 0.86907);
  auto half = 1.96 * std::sqrt(0.86907 * 0.13093 / 100000.0);
  EXPECT_NEAR(e.ci_low, 0.86907 - half, 1e-15);
  EXPECT_NEAR(e.ci_high, 0.86907 + half, 1e-15);
  EXPECT_NEAR(e.ci_low, 0.86698, 1e-5);
  EXPECT_NEAR(e.ci_high, 0.87116, 1e-5);
}

TEST(Estimator, WaldIntervalEdges) {
  auto all = wald_interval(10, 10);
  EXPECT_EQ(all.estimate, 1.0);
  EXPECT_EQ(all.ci_low, 1.0);
  EXPECT_EQ(all.ci_high, 1.0);
  auto none = wald_interval(0, 10);
  EXPECT_EQ(none.ci_low, 0.0);
  EXPECT_EQ(none.ci_high, 0.0);
  auto half = wald_interval(200, 400);
  EXPECT_NEAR(half.ci_high - half.estimate, 0.049, 1e-12);
  auto clipped = wald_interval(1, 3);
  EXPECT_GE(clipped.ci_low, 0.0);
  EXPECT_THROW(wald_interval(0, 0), std::invalid_argument);
}

TEST(Estimator, AtomProbabilityReadsTags) {
  auto e = atom_probability(draws_with_atoms(3, 4));
  EXPECT_DOUBLE_EQ(e.estimate, 0.75);
  // A free coordinate sitting exactly on the atom value is not an atom.
  auto tricky = std::vector<Mixed_state>{{.locations = {Coord::free(0.0)}}};
  EXPECT_DOUBLE_EQ(atom_probability(tricky).estimate, 0.0);
}

// The nominal 95% interval covers the true proportion about 95% of the time.
TEST(Estimator, WaldCoverage) {
  auto stream = Uniform_stream{2};
  auto p = 0.87;
  auto n = std::size_t{2000};
  auto covered = 0;
  constexpr auto reps = 500;
  for (auto rep = 0; rep != reps; ++rep) {
    auto k = std::size_t{0};
    for (auto i = std::size_t{0}; i != n; ++i) {
      k += stream.uniform01() < p ? 1 : 0;
    }
    auto e = wald_interval(k, n);
    covered += (e.ci_low <= p && p <= e.ci_high) ? 1 : 0;
  }
  auto rate = static_cast<double>(covered) / reps;
  EXPECT_GE(rate, 0.93);
  EXPECT_LE(rate, 0.97);
}

TEST(Estimator, BctSummary) {
  auto times = std::vector<std::size_t>{6, 8223};
  auto s = bct_summary(times);
  EXPECT_DOUBLE_EQ(s.mean, 4114.5);
  EXPECT_EQ(s.min, 6u);
  EXPECT_EQ(s.max, 8223u);
  EXPECT_THROW(bct_summary({}), std::invalid_argument);
}

TEST(Estimator, HistogramBins) {
  auto values = std::vector<double>{0.0, 0.5, 1.0, 2.0, 4.0};
  auto h = histogram(values, 4);
  EXPECT_EQ(h.lo, 0.0);
  EXPECT_EQ(h.hi, 4.0);
  EXPECT_EQ(h.bin_width(), 1.0);
  EXPECT_EQ(h.counts, (std::vector<std::size_t>{2, 1, 1, 1}));
  EXPECT_EQ(h.total(), values.size());
}

TEST(Estimator, HistogramSingleValue) {
  auto values = std::vector<double>{2.0, 2.0, 2.0};
  auto h = histogram(values, 5);
  EXPECT_EQ(h.counts[0], 3u);
  EXPECT_EQ(h.total(), 3u);
  EXPECT_THROW(histogram({}, 3), std::invalid_argument);
  EXPECT_THROW(histogram(values, 0), std::invalid_argument);
}

TEST(Estimator, HistogramConservesCount) {
  auto stream = Uniform_stream{6};
  auto values = std::vector<double>(9999);
  for (auto& v : values) {
    v = std::exp(5.0 * stream.uniform01());
  }
  for (auto bins : {1u, 7u, 50u, 1000u}) {
    EXPECT_EQ(histogram(values, bins).total(), values.size());
  }
}
