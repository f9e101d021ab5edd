#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lottery/distribution.hpp"

namespace lottery {

struct SubsetSumInstance {
  std::vector<double> values;
  double target = 0.0;
  double tolerance = 0.0;
};

/// Result of a subset-sum minimization.
///
/// achieved_sum is always the left fold of values[i] over ascending
/// indices, so two solvers that pick the same subset report bit-identical
/// sums and errors.
struct SubsetSelection {
  std::vector<std::size_t> indices;
  double achieved_sum = 0.0;
  double abs_error = 0.0;
  /// abs_error <= tolerance
  bool feasible = false;
};

inline constexpr std::size_t kMaxExactValues = 46;
inline constexpr std::size_t kMaxBruteForceValues = 20;
inline constexpr std::size_t kMaxEnumeratedValues = 26;
inline constexpr std::size_t kMaxCoverageValues = 46;
inline constexpr std::size_t kMaxCoverageSums = std::size_t{1} << 26;

/// Exact min over all 2^n subsets of |target - Σ_{i∈S} values_i| by
/// meet-in-the-middle. Ties go to the smaller subset, then to the
/// lexicographically smaller index list. Exact zeros are skipped (they can
/// only lose the tie-break), and the capacity limit of 46 applies to the
/// remaining nonzero values.
/// An optimum above the tolerance is returned with feasible = false.
SubsetSelection solve_subset_sum(const SubsetSumInstance& inst);

/// Exhaustive enumeration with the same objective and tie-breaking.
/// Throws CapacityError for n > 20.
SubsetSelection brute_force_solve(const SubsetSumInstance& inst);

/// All 2^n subset sums (duplicates kept), ascending. n <= 26.
std::vector<double> enumerate_sums(std::span<const double> values);

struct CoverageResult {
  bool covered = false;
  /// Twice the largest distance from a point of [lo, hi] lying between two
  /// consecutive retained sums to the nearer of them; equals s_{j+1} - s_j
  /// for gaps entirely inside the interval. Exact whenever it exceeds 2 eps.
  double worst_gap = 0.0;
  /// (min sum - lo, hi - max sum): positive when an endpoint lies outside
  /// the hull of the sums.
  double slack_lo = 0.0;
  double slack_hi = 0.0;
  /// Number of subset sums examined (2^n).
  std::uint64_t sum_count = 0;

  /// sup over z in [lo, hi] of the distance from z to the nearest sum.
  double max_distance() const;
};

/// Whether every z in [lo, hi] has a subset sum within eps.
/// covered == (worst_gap <= 2 eps && slack_lo <= eps && slack_hi <= eps).
///
/// Sums whose eps-ball is already covered by their neighbours are dropped
/// while building the list, so memory scales with (range of sums) / eps
/// rather than 2^n. max_distance() is exact whenever it exceeds eps.
/// Throws CapacityError for n > 46.
CoverageResult coverage_check(std::span<const double> values, double lo, double hi, double eps);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval for a binomial proportion at 95% confidence.
Interval wilson_interval(std::size_t successes, std::size_t trials);

struct CoverageEstimate {
  double prob = 0.0;
  Interval ci95;
  std::size_t successes = 0;
  std::size_t trials = 0;
};

/// Fraction of seeded trials in which n draws from dist eps-cover [lo, hi].
/// Trial t draws from its own stream derive_seed(seed, "coverage", t), and
/// the first n draws of a stream do not depend on n, so the estimate is
/// monotone in n for a fixed seed.
CoverageEstimate estimate_coverage_probability(const Distribution& dist, std::size_t n,
                                               double eps, double lo, double hi,
                                               std::size_t trials, std::uint64_t seed);

}  // namespace lottery
