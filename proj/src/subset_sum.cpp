#include "lottery/subset_sum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "lottery/errors.hpp"
#include "lottery/parallel.hpp"
#include "lottery/rng.hpp"

namespace lottery {
namespace {

using Mask = std::uint64_t;

void validate(const SubsetSumInstance& inst) {
  if (!std::isfinite(inst.target)) throw DomainError("subset-sum target must be finite");
  if (!(inst.tolerance > 0)) throw DomainError("subset-sum tolerance must be positive");
  for (double v : inst.values) {
    if (!std::isfinite(v)) throw DomainError("subset-sum values must be finite");
  }
}

double canonical_sum(std::span<const double> values, Mask mask) {
  double s = 0.0;
  while (mask != 0) {
    s += values[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return s;
}

// Ordering on candidate subsets: error, then cardinality, then the
// lexicographic order of the ascending index lists. For equal cardinality
// the list containing the lowest differing index is the smaller one.
struct Candidate {
  Mask mask = 0;
  double error = std::numeric_limits<double>::infinity();

  bool better_than(const Candidate& other) const {
    if (error != other.error) return error < other.error;
    const int pa = std::popcount(mask);
    const int pb = std::popcount(other.mask);
    if (pa != pb) return pa < pb;
    const Mask diff = mask ^ other.mask;
    if (diff == 0) return false;
    return (mask & (diff & (~diff + 1))) != 0;
  }
};

Candidate evaluate(std::span<const double> values, double target, Mask mask) {
  return {mask, std::abs(target - canonical_sum(values, mask))};
}

SubsetSelection to_selection(std::span<const double> values, const SubsetSumInstance& inst,
                             Mask mask) {
  SubsetSelection sel;
  for (Mask m = mask; m != 0; m &= m - 1) {
    sel.indices.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  sel.achieved_sum = canonical_sum(values, mask);
  sel.abs_error = std::abs(inst.target - sel.achieved_sum);
  sel.feasible = sel.abs_error <= inst.tolerance;
  return sel;
}

// Sums of every subset of values[offset, offset + count), indexed by the
// local bit mask.
std::vector<double> half_sums(std::span<const double> values, std::size_t offset,
                              std::size_t count) {
  std::vector<double> sums(std::size_t{1} << count, 0.0);
  for (std::size_t m = 1; m < sums.size(); ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    sums[m] = sums[m & (m - 1)] + values[offset + low];
  }
  return sums;
}

}  // namespace

SubsetSelection solve_subset_sum(const SubsetSumInstance& inst) {
  validate(inst);

  // Exact zeros never improve the error and only add cardinality, so the
  // tie-broken optimum never contains one; solve on the nonzero values.
  std::vector<std::size_t> original;
  std::vector<double> values;
  for (std::size_t i = 0; i < inst.values.size(); ++i) {
    if (inst.values[i] != 0.0) {
      original.push_back(i);
      values.push_back(inst.values[i]);
    }
  }
  const std::size_t n = values.size();
  if (n > kMaxExactValues) {
    throw CapacityError("solve_subset_sum supports at most " + std::to_string(kMaxExactValues) +
                        " nonzero values, got " + std::to_string(n));
  }
  const double target = inst.target;
  const std::size_t left_n = n / 2;
  const std::size_t right_n = n - left_n;

  const std::vector<double> left = half_sums(values, 0, left_n);
  std::vector<std::pair<double, Mask>> right;
  {
    const std::vector<double> raw = half_sums(values, left_n, right_n);
    right.reserve(raw.size());
    for (std::size_t m = 0; m < raw.size(); ++m) right.emplace_back(raw[m], m);
    std::sort(right.begin(), right.end());
  }
  auto right_lower = [&](double key) {
    return std::lower_bound(right.begin(), right.end(), key,
                            [](const auto& e, double k) { return e.first < k; });
  };

  // Pass 1: optimum of the split arithmetic (a + b).
  double best = std::numeric_limits<double>::infinity();
  for (double a : left) {
    auto it = right_lower(target - a);
    if (it != right.end()) best = std::min(best, std::abs(target - (a + it->first)));
    if (it != right.begin()) best = std::min(best, std::abs(target - (a + std::prev(it)->first)));
  }

  // Pass 2: a + b and the canonical fold differ by a few ulps of sum|v|, so
  // re-score every split candidate near the optimum with the canonical sum
  // and apply the tie-breaks there.
  double magnitude = std::abs(target);
  for (double v : values) magnitude += std::abs(v);
  const double slack =
      8.0 * static_cast<double>(n + 1) * std::numeric_limits<double>::epsilon() * magnitude;
  const double window = best + slack;

  Candidate winner;
  for (std::size_t lm = 0; lm < left.size(); ++lm) {
    const double a = left[lm];
    for (auto it = right_lower(target - a - window); it != right.end(); ++it) {
      const double gap = target - (a + it->first);
      if (gap < -window) break;
      if (std::abs(gap) > window) continue;
      const Mask mask = static_cast<Mask>(lm) | (it->second << left_n);
      const Candidate c = evaluate(values, target, mask);
      if (c.better_than(winner)) winner = c;
    }
  }

  // Compression keeps index order, so the fold order and the lexicographic
  // order carry over to the original indices unchanged.
  SubsetSelection sel;
  for (Mask m = winner.mask; m != 0; m &= m - 1) {
    const std::size_t i = original[static_cast<std::size_t>(std::countr_zero(m))];
    sel.indices.push_back(i);
    sel.achieved_sum += inst.values[i];
  }
  sel.abs_error = std::abs(inst.target - sel.achieved_sum);
  sel.feasible = sel.abs_error <= inst.tolerance;
  return sel;
}

SubsetSelection brute_force_solve(const SubsetSumInstance& inst) {
  validate(inst);
  const std::size_t n = inst.values.size();
  if (n > kMaxBruteForceValues) {
    throw CapacityError("brute_force_solve supports at most " +
                        std::to_string(kMaxBruteForceValues) + " values, got " +
                        std::to_string(n));
  }
  Candidate winner;
  const Mask end = Mask{1} << n;
  for (Mask m = 0; m < end; ++m) {
    const Candidate c = evaluate(inst.values, inst.target, m);
    if (c.better_than(winner)) winner = c;
  }
  return to_selection(inst.values, inst, winner.mask);
}

std::vector<double> enumerate_sums(std::span<const double> values) {
  if (values.size() > kMaxEnumeratedValues) {
    throw CapacityError("enumerate_sums supports at most " +
                        std::to_string(kMaxEnumeratedValues) + " values, got " +
                        std::to_string(values.size()));
  }
  std::vector<double> sums{0.0};
  sums.reserve(std::size_t{1} << values.size());
  std::vector<double> shifted;
  std::vector<double> merged;
  for (double v : values) {
    shifted.resize(sums.size());
    std::transform(sums.begin(), sums.end(), shifted.begin(), [v](double s) { return s + v; });
    merged.resize(2 * sums.size());
    std::merge(sums.begin(), sums.end(), shifted.begin(), shifted.end(), merged.begin());
    sums.swap(merged);
  }
  return sums;
}

double CoverageResult::max_distance() const {
  return std::max({0.5 * worst_gap, slack_lo, slack_hi, 0.0});
}

CoverageResult coverage_check(std::span<const double> values, double lo, double hi, double eps) {
  if (!(lo < hi)) throw DomainError("coverage_check needs lo < hi");
  if (!(eps > 0)) throw DomainError("coverage_check needs eps > 0");
  if (values.size() > kMaxCoverageValues) {
    throw CapacityError("coverage_check supports at most " +
                        std::to_string(kMaxCoverageValues) + " values, got " +
                        std::to_string(values.size()));
  }

  // Subset sums built value by value, dropping any sum whose eps-ball lies
  // inside the union of its two neighbours' balls. Shifting all three by a
  // later value keeps that containment, so the final union of balls (and
  // hence the verdict) is the same as for the full 2^n list.
  std::vector<double> sums{0.0};
  std::vector<double> shifted;
  std::vector<double> merged;
  const double reach = 2.0 * eps;
  for (double v : values) {
    if (v == 0.0) continue;
    shifted.resize(sums.size());
    std::transform(sums.begin(), sums.end(), shifted.begin(), [v](double s) { return s + v; });
    merged.resize(2 * sums.size());
    std::merge(sums.begin(), sums.end(), shifted.begin(), shifted.end(), merged.begin());
    sums.clear();
    for (double s : merged) {
      while (sums.size() >= 2 && s - sums[sums.size() - 2] <= reach) sums.pop_back();
      sums.push_back(s);
    }
    if (sums.size() > kMaxCoverageSums) {
      throw CapacityError("coverage_check: more than " + std::to_string(kMaxCoverageSums) +
                          " distinct sums; eps is too small for this many values");
    }
  }

  CoverageResult r;
  r.sum_count = std::uint64_t{1} << values.size();
  r.slack_lo = sums.front() - lo;
  r.slack_hi = hi - sums.back();
  for (std::size_t j = 0; j + 1 < sums.size(); ++j) {
    const double a = sums[j];
    const double b = sums[j + 1];
    const double left = std::max(a, lo);
    const double right = std::min(b, hi);
    if (left > right) continue;
    const double z = std::clamp(0.5 * (a + b), left, right);
    r.worst_gap = std::max(r.worst_gap, 2.0 * std::min(z - a, b - z));
  }
  r.covered = r.worst_gap <= reach && r.slack_lo <= eps && r.slack_hi <= eps;
  return r;
}

Interval wilson_interval(std::size_t successes, std::size_t trials) {
  if (trials == 0) throw DomainError("wilson_interval needs at least one trial");
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {lo, hi};
}

CoverageEstimate estimate_coverage_probability(const Distribution& dist, std::size_t n,
                                               double eps, double lo, double hi,
                                               std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("estimate_coverage_probability needs trials >= 1");
  if (!(eps > 0)) throw DomainError("coverage eps must be positive");
  if (!(lo < hi)) throw DomainError("coverage interval needs lo < hi");
  if (n > kMaxCoverageValues) {
    throw CapacityError("coverage estimation supports at most " +
                        std::to_string(kMaxCoverageValues) + " values, got " +
                        std::to_string(n));
  }
  std::vector<std::uint8_t> hit(trials, 0);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng = make_rng(seed, "coverage", t);
    std::vector<double> values(n);
    for (double& v : values) v = dist.sample(rng);
    hit[t] = coverage_check(values, lo, hi, eps).covered ? 1 : 0;
  });
  CoverageEstimate est;
  est.trials = trials;
  est.successes = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
  est.prob = static_cast<double>(est.successes) / static_cast<double>(trials);
  est.ci95 = wilson_interval(est.successes, trials);
  return est;
}

}  // namespace lottery
