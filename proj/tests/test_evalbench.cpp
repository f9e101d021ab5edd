#include <gtest/gtest.h>

#include <cmath>

#include "lottery/distribution.hpp"
#include "lottery/errors.hpp"
#include "lottery/evalbench.hpp"
#include "lottery/gadgets.hpp"
#include "lottery/parallel.hpp"
#include "oracles.hpp"

using namespace lottery;

namespace {

double error_at(const DenseNetwork& f, const DenseNetwork& g, const Vector& x) {
  const Vector a = forward(f, x);
  const Vector b = forward(g, x);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

}  // namespace

TEST(SupError, IdenticalNetworksGiveZero) {
  const std::vector<std::size_t> widths{3, 6, 2};
  const DenseNetwork f = random_network(widths, Distribution::uniform(), 1);
  EXPECT_EQ(sup_error_estimate(f, f, all_ones_masks(f), 1000, 2), 0.0);
}

TEST(SupError, LinearizedDifferenceApproachesOperatorNorm) {
  const DenseMatrix w = DenseMatrix::from_rows({{0.6, -0.2}, {0.3, 0.5}});
  const DenseMatrix w2 = DenseMatrix::from_rows({{0.1, 0.4}, {-0.3, 0.2}});
  std::vector<double> diff;
  for (std::size_t i = 0; i < 4; ++i) diff.push_back(w.entries()[i] - w2.entries()[i]);
  const double norm = oracle::sampled_operator_norm(diff, 2, 2, 200000, 5);
  const DenseNetwork f = linearize(w);
  const DenseNetwork g = linearize(w2);
  const double est = sup_error_estimate(f, g, all_ones_masks(g), 100000, 3);
  EXPECT_LE(est, norm + 1e-9);
  EXPECT_GE(est, 0.98 * norm);
}

TEST(SupError, HomogeneousInInputScale) {
  const std::vector<std::size_t> widths{3, 5, 2};
  const DenseNetwork f = random_network(widths, Distribution::uniform(), 4);
  const DenseNetwork g = random_network(widths, Distribution::uniform(), 5);
  for (const auto& x : sample_unit_sphere(3, 6, 50)) {
    Vector half = x;
    for (double& v : half) v *= 0.5;
    EXPECT_NEAR(error_at(f, g, half), 0.5 * error_at(f, g, x), 1e-12);
  }
}

TEST(SupError, NonDecreasingInSampleCount) {
  const std::vector<std::size_t> widths{4, 5, 3};
  const DenseNetwork f = random_network(widths, Distribution::uniform(), 7);
  const DenseNetwork g = random_network(widths, Distribution::uniform(), 8);
  double prev = 0.0;
  for (std::size_t n : {1, 10, 100, 1000, 5000}) {
    const double e = sup_error_estimate(f, g, all_ones_masks(g), n, 9);
    EXPECT_GE(e, prev);
    prev = e;
  }
}

TEST(SupError, ThreadCountDoesNotMatter) {
  const std::vector<std::size_t> widths{4, 8, 3};
  const DenseNetwork f = random_network(widths, Distribution::uniform(), 1);
  const DenseNetwork g = random_network(widths, Distribution::uniform(), 2);
  set_thread_count(1);
  const double a = sup_error_estimate(f, g, all_ones_masks(g), 3000, 4);
  set_thread_count(4);
  const double b = sup_error_estimate(f, g, all_ones_masks(g), 3000, 4);
  set_thread_count(1);
  EXPECT_EQ(a, b);
}

TEST(SupError, DimensionMismatch) {
  const DenseNetwork f({DenseMatrix(2, 3)});
  const DenseNetwork g({DenseMatrix(2, 2)});
  EXPECT_THROW(sup_error_estimate(f, g, all_ones_masks(g), 10, 1), ShapeError);
}

TEST(FitLine, RecoversSyntheticLaw) {
  std::vector<double> x, y;
  for (double eps : {0.2, 0.1, 0.05, 0.02, 0.01}) {
    x.push_back(std::log(1 / eps));
    y.push_back(std::round(4.3 * std::log(1 / eps) + 2.0));
  }
  const LinearFit fit = fit_line(x, y);
  EXPECT_NEAR(fit.slope, 4.3, 0.05 * 4.3);
  EXPECT_GT(fit.r_squared, 0.99);

  const LinearFit exact = fit_line(std::vector<double>{1, 2, 3}, std::vector<double>{5, 7, 9});
  EXPECT_NEAR(exact.slope, 2.0, 1e-12);
  EXPECT_NEAR(exact.intercept, 3.0, 1e-12);
  EXPECT_NEAR(exact.r_squared, 1.0, 1e-12);
  EXPECT_THROW(fit_line(std::vector<double>{1}, std::vector<double>{1}), DomainError);
  EXPECT_THROW(fit_line(std::vector<double>{1, 1}, std::vector<double>{1, 2}), DomainError);
}

TEST(MinimalCoverageN, IsTheFirstGoodN) {
  const auto dist = Distribution::uniform();
  const auto row = minimal_coverage_n(0.05, 0.1, dist, 100, 3);
  ASSERT_FALSE(row.saturated);
  EXPECT_GE(row.estimate.prob, 0.9);
  EXPECT_EQ(row.estimate.trials, 100u);
  const auto below = estimate_coverage_probability(dist, row.minimal_n - 1, 0.05, -0.5, 0.5, 100, 3);
  EXPECT_LT(below.prob, 0.9);
}

TEST(MinimalCoverageN, SaturationIsFlagged) {
  const auto row = minimal_coverage_n(0.01, 0.1, Distribution::uniform(), 50, 1, {-0.5, 0.5, 3});
  EXPECT_TRUE(row.saturated);
  EXPECT_EQ(row.minimal_n, 3u);
}

TEST(LuekerSweep, LogarithmicInEpsilon) {
  const std::vector<double> eps{0.2, 0.1, 0.05, 0.02, 0.01};
  const auto sweep = lueker_sweep(eps, 0.1, Distribution::uniform(), 200, 1);
  ASSERT_EQ(sweep.rows.size(), 5u);
  for (const auto& r : sweep.rows) {
    EXPECT_FALSE(r.saturated);
    EXPECT_EQ(r.seed, 1u);
    EXPECT_EQ(r.dist_tag, "uniform:-1,1");
  }
  EXPECT_LE(sweep.rows.front().minimal_n, sweep.rows.back().minimal_n);
  EXPECT_GT(sweep.fit.slope, 0.0);
  EXPECT_GE(sweep.fit.r_squared, 0.9);
}

TEST(LuekerSweep, NormalCoefficientsFinish) {
  const std::vector<double> eps{0.2, 0.05};
  const auto sweep = lueker_sweep(eps, 0.1, Distribution::normal(), 100, 2);
  for (const auto& r : sweep.rows) EXPECT_FALSE(r.saturated);
}

TEST(LuekerSweep, Deterministic) {
  const std::vector<double> eps{0.2, 0.1};
  set_thread_count(1);
  const auto a = lueker_sweep(eps, 0.1, Distribution::uniform(), 80, 4);
  set_thread_count(3);
  const auto b = lueker_sweep(eps, 0.1, Distribution::uniform(), 80, 4);
  set_thread_count(1);
  for (std::size_t i = 0; i < eps.size(); ++i) {
    EXPECT_EQ(a.rows[i].minimal_n, b.rows[i].minimal_n);
    EXPECT_EQ(a.rows[i].estimate.successes, b.rows[i].estimate.successes);
  }
  EXPECT_EQ(a.fit.slope, b.fit.slope);
}

TEST(CalibrateC, ReproducesMinimalN) {
  const auto dist = Distribution::uniform();
  const auto cal = calibrate_c(0.1, 0.05, dist, 200, 1, {-0.5, 0.5, 26});
  const auto n = static_cast<std::size_t>(std::ceil(cal.constant_c * std::log(2 / 0.05)));
  EXPECT_EQ(n, cal.row.minimal_n);
  EXPECT_GE(estimate_coverage_probability(dist, n, 0.05, -0.5, 0.5, 200, 1).prob, 0.9);
}

TEST(CalibrateC, EasiestPointRespectsCap) {
  const auto cal = calibrate_c(0.2, 0.2, Distribution::uniform(), 200, 1, {-0.5, 0.5, 26});
  EXPECT_TRUE(std::isfinite(cal.constant_c));
  EXPECT_LE(cal.constant_c, 26 / std::log(2 / 0.2));
}

TEST(CalibrateC, StableAcrossSeeds) {
  const auto a = calibrate_c(0.1, 0.02, Distribution::uniform(), 200, 1, {-0.5, 0.5, 26});
  const auto b = calibrate_c(0.1, 0.02, Distribution::uniform(), 200, 77, {-0.5, 0.5, 26});
  EXPECT_NEAR(b.constant_c, a.constant_c, 0.2 * a.constant_c);
}

TEST(CalibrateC, SaturationThrows) {
  EXPECT_THROW(calibrate_c(0.1, 0.01, Distribution::uniform(), 50, 1, {-0.5, 0.5, 4}),
               CapacityError);
}

TEST(PerWeight, ZeroTarget) {
  const DenseNetwork target({DenseMatrix(4, 3)});
  const auto rows = per_weight_report(target, 21, 0.01, Distribution::uniform(), 1);
  ASSERT_EQ(rows.size(), 12u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.achieved_error, 0.0);
    EXPECT_EQ(r.subset_size, 0u);
    EXPECT_TRUE(r.feasible);
  }
}

TEST(PerWeight, RowOrderAndBookkeeping) {
  const std::vector<std::size_t> widths{10, 20, 5};
  const DenseNetwork target = random_network(widths, Distribution::uniform(-0.5, 0.5), 3);
  const auto rows = per_weight_report(target, 21, 0.01, Distribution::uniform(), 4);
  ASSERT_EQ(rows.size(), 300u);
  EXPECT_EQ(rows.size() * 21, 6300u);
  EXPECT_EQ(rows[0].layer, 0u);
  EXPECT_EQ(rows[199].layer, 0u);
  EXPECT_EQ(rows[199].out_idx, 19u);
  EXPECT_EQ(rows[199].in_idx, 9u);
  EXPECT_EQ(rows[200].layer, 1u);
  EXPECT_EQ(rows[200].target, target.layer(1)(0, 0));
  std::size_t ok = 0;
  for (const auto& r : rows) ok += r.feasible;
  EXPECT_GE(ok, 288u);
}

TEST(DensityCheck, ProductLawsPass) {
  for (const auto& d : {Distribution::product_uniform(), Distribution::half_product_atom()}) {
    const DensityCheck r = density_check(d, 100000, 1);
    EXPECT_TRUE(r.integral_ok()) << d.tag() << " " << r.integral;
    EXPECT_TRUE(r.ks_ok()) << d.tag() << " " << r.ks_statistic;
    EXPECT_TRUE(r.certificate_ok()) << d.tag();
    EXPECT_EQ(r.grid_points, 10000u);
  }
}

TEST(DensityCheck, ContinuousLawsPass) {
  for (const auto& d : {Distribution::uniform(), Distribution::normal(), Distribution::laplace()}) {
    const DensityCheck r = density_check(d, 20000, 2);
    EXPECT_TRUE(r.integral_ok()) << d.tag() << " " << r.integral;
    EXPECT_TRUE(r.ks_ok()) << d.tag();
    EXPECT_TRUE(r.certificate_ok()) << d.tag();
  }
}

TEST(KsStatistic, KnownValuesAndAtoms) {
  const auto u = Distribution::uniform(0.0, 1.0);
  EXPECT_DOUBLE_EQ(ks_statistic({0.5}, u), 0.5);
  EXPECT_DOUBLE_EQ(ks_statistic({0.25, 0.75}, u), 0.25);
  // Draws that land on the atom exactly as often as its mass match it.
  const auto h = Distribution::half_product_atom();
  EXPECT_LT(ks_statistic({0.0, 0.0, -0.5, 0.5}, h), 0.26);
  // A sampler that never hits the atom is rejected.
  const auto p = Distribution::product_uniform();
  Rng rng = make_rng(1, "test.ks");
  std::vector<double> xs(20000);
  for (double& x : xs) x = p.sample(rng);
  EXPECT_GT(ks_statistic(xs, h), 0.2);
}
