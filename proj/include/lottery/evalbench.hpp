#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lottery/distribution.hpp"
#include "lottery/subset_sum.hpp"
#include "lottery/tensor.hpp"

namespace lottery {

/// max over n_samples unit-sphere points of ‖f(x) - masked g(x)‖.
///
/// Both maps are positively homogeneous, so the sup over the ball is
/// attained on the sphere. Samples for a seed are nested in n_samples, which
/// makes the estimate non-decreasing in n_samples.
double sup_error_estimate(const DenseNetwork& f, const DenseNetwork& g, const MaskSet& masks,
                          std::size_t n_samples, std::uint64_t seed);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y ≈ slope·x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct CoverageTarget {
  double lo = -0.5;
  double hi = 0.5;
  /// Largest n tried before a row is declared saturated.
  std::size_t max_n = kMaxEnumeratedValues;
};

struct SweepRow {
  double epsilon = 0.0;
  double delta = 0.0;
  std::size_t minimal_n = 0;
  CoverageEstimate estimate;  // at minimal_n
  std::string dist_tag;
  std::uint64_t seed = 0;
  bool saturated = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// minimal_n against ln(1/ε).
  LinearFit fit;
};

/// Smallest n in [1, target.max_n] whose estimated coverage probability is
/// at least 1 - δ. Every n shares the same per-trial streams, so coverage is
/// monotone in n and bisection is exact. saturated is set when even max_n
/// falls short (minimal_n is then max_n).
SweepRow minimal_coverage_n(double eps, double delta, const Distribution& dist,
                            std::size_t trials, std::uint64_t seed,
                            const CoverageTarget& target = {});

SweepResult lueker_sweep(std::span<const double> eps_list, double delta,
                         const Distribution& dist, std::size_t trials, std::uint64_t seed,
                         const CoverageTarget& target = {});

struct Calibration {
  double constant_c = 0.0;
  SweepRow row;
};

/// Empirical constant minimal_n / ln(2 / min(ε, δ)). Throws CapacityError
/// when the search saturates.
Calibration calibrate_c(double delta, double eps, const Distribution& dist, std::size_t trials,
                        std::uint64_t seed, const CoverageTarget& target = {-0.5, 0.5, 46});

struct WeightRow {
  std::size_t layer = 0;
  std::size_t out_idx = 0;
  std::size_t in_idx = 0;
  double target = 0.0;
  double achieved_error = 0.0;
  std::size_t subset_size = 0;
  bool feasible = false;
};

/// Approximates every weight of `target` by the best subset sum of n fresh
/// draws from dist (one stream per weight, keyed by its flat index).
std::vector<WeightRow> per_weight_report(const DenseNetwork& target, std::size_t n, double eps,
                                         const Distribution& dist, std::uint64_t seed);

struct DensityCheck {
  std::string dist_tag;
  /// Total mass of the density found by quadrature, and the mass it should
  /// carry (½ for half_product_atom, whose other half is the atom at 0).
  double integral = 0.0;
  double expected_mass = 1.0;
  double ks_statistic = 0.0;
  /// Asymptotic Kolmogorov critical value at α = 0.01: 1.62762 / √n.
  double ks_critical = 0.0;
  std::size_t samples = 0;
  /// Certificate (α, c) and the smallest pdf seen on the grid over
  /// 1e-9 ≤ |z| ≤ c, to be compared against α / 2c.
  double alpha = 0.0;
  double c = 0.0;
  double grid_min_pdf = 0.0;
  std::size_t grid_points = 0;

  bool integral_ok(double tol = 1e-6) const { return std::abs(integral - expected_mass) <= tol; }
  bool ks_ok() const { return ks_statistic < ks_critical; }
  bool certificate_ok() const { return grid_min_pdf >= alpha / (2.0 * c) * (1.0 - 1e-12); }
};

/// One-sample Kolmogorov-Smirnov distance between `samples` and dist's CDF.
/// Ties (the atom of half_product_atom) are compared against the CDF's left
/// and right limits.
double ks_statistic(std::vector<double> samples, const Distribution& dist);

/// Quadrature of the pdf, KS test of n_samples sampler draws, and a
/// 10⁴-point check of the uniform-component certificate.
DensityCheck density_check(const Distribution& dist, std::size_t n_samples, std::uint64_t seed);

}  // namespace lottery
