#include <gtest/gtest.h>

#include <cmath>

#include "lottery/errors.hpp"
#include "lottery/subset_sum.hpp"
#include "oracles.hpp"

using namespace lottery;

namespace {

using Indices = std::vector<std::size_t>;

SubsetSumInstance random_instance(std::uint64_t seed, std::size_t n) {
  Rng rng = make_rng(seed, "test.instance");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SubsetSumInstance inst{std::vector<double>(n), 0.0, 0.01};
  for (double& v : inst.values) v = u(rng);
  inst.target = u(rng);
  return inst;
}

void expect_consistent(const SubsetSumInstance& inst, const SubsetSelection& sel) {
  EXPECT_TRUE(std::is_sorted(sel.indices.begin(), sel.indices.end()));
  EXPECT_EQ(std::adjacent_find(sel.indices.begin(), sel.indices.end()), sel.indices.end());
  double sum = 0.0;
  for (auto i : sel.indices) {
    ASSERT_LT(i, inst.values.size());
    sum += inst.values[i];
  }
  EXPECT_EQ(sel.achieved_sum, sum);
  EXPECT_EQ(sel.abs_error, std::abs(inst.target - sum));
  EXPECT_EQ(sel.feasible, sel.abs_error <= inst.tolerance);
}

}  // namespace

TEST(SolveSubsetSum, SmallExample) {
  const SubsetSumInstance inst{{0.3, -0.2, 0.7}, 0.5, 1e-9};
  const auto sel = solve_subset_sum(inst);
  EXPECT_EQ(sel.indices, (Indices{1, 2}));
  EXPECT_NEAR(sel.abs_error, 0.0, 1e-15);
  EXPECT_TRUE(sel.feasible);
  expect_consistent(inst, sel);
}

TEST(SolveSubsetSum, ZeroTargetPicksEmptySet) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = random_instance(seed, 12);
    inst.target = 0.0;
    const auto sel = solve_subset_sum(inst);
    EXPECT_TRUE(sel.indices.empty());
    EXPECT_EQ(sel.abs_error, 0.0);
  }
}

TEST(BruteForce, SingleValueCases) {
  auto sel = brute_force_solve({{0.4}, 0.4, 0.01});
  EXPECT_EQ(sel.indices, (Indices{0}));
  EXPECT_EQ(sel.abs_error, 0.0);
  sel = brute_force_solve({{0.4}, -0.1, 0.01});
  EXPECT_TRUE(sel.indices.empty());
  EXPECT_EQ(sel.abs_error, 0.1);
  EXPECT_FALSE(sel.feasible);
}

TEST(BruteForce, MatchesReferenceEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_instance(seed, 1 + seed % 12);
    const auto sel = brute_force_solve(inst);
    const auto ref = oracle::best_subset(inst.values, inst.target);
    EXPECT_EQ(sel.indices, ref.indices);
    EXPECT_EQ(sel.abs_error, ref.error);
  }
}

TEST(SolveSubsetSum, MatchesBruteForceBitExactly) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto inst = random_instance(seed, 1 + seed % 18);
    const auto a = solve_subset_sum(inst);
    const auto b = brute_force_solve(inst);
    ASSERT_EQ(a.indices, b.indices) << "seed " << seed;
    ASSERT_EQ(a.abs_error, b.abs_error) << "seed " << seed;
    ASSERT_EQ(a.achieved_sum, b.achieved_sum) << "seed " << seed;
  }
}

TEST(SolveSubsetSum, TieBreaksBySizeThenLexicographicOrder) {
  // {0} and {1} both hit 0.5 exactly; {2, 3} does too but is larger.
  auto sel = solve_subset_sum({{0.5, 0.5, 0.25, 0.25}, 0.5, 0.01});
  EXPECT_EQ(sel.indices, (Indices{0}));
  // {0, 3} and {1, 2} both give 1.0 exactly.
  sel = solve_subset_sum({{0.75, 0.5, 0.5, 0.25}, 1.0, 0.01});
  EXPECT_EQ(sel.indices, (Indices{0, 3}));
  const auto ref = oracle::best_subset({0.75, 0.5, 0.5, 0.25}, 1.0);
  EXPECT_EQ(sel.indices, ref.indices);
}

TEST(SolveSubsetSum, IntegerValuedTiesMatchOracle) {
  // Many exact ties: small integers.
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng = make_rng(seed, "test.ints");
    std::uniform_int_distribution<int> u(-4, 4);
    std::vector<double> values(10);
    for (double& v : values) v = u(rng);
    const double target = u(rng);
    const auto sel = solve_subset_sum({values, target, 0.5});
    const auto ref = oracle::best_subset(values, target);
    EXPECT_EQ(sel.indices, ref.indices) << "seed " << seed;
  }
}

TEST(SolveSubsetSum, ZerosAreNeverSelectedAndDoNotCount) {
  std::vector<double> values(60, 0.0);
  for (std::size_t i = 0; i < 20; ++i) values[3 * i + 1] = 0.1 * static_cast<double>(i + 1);
  const SubsetSumInstance inst{values, 0.35, 0.01};
  const auto sel = solve_subset_sum(inst);
  for (auto i : sel.indices) EXPECT_NE(values[i], 0.0);
  EXPECT_NEAR(sel.abs_error, 0.05, 1e-12);
  expect_consistent(inst, sel);
}

TEST(SolveSubsetSum, CapacityLimits) {
  auto inst = random_instance(1, 47);
  EXPECT_THROW(solve_subset_sum(inst), CapacityError);
  inst.values.resize(46);
  EXPECT_NO_THROW(solve_subset_sum(inst));
  EXPECT_THROW(brute_force_solve(random_instance(1, 21)), CapacityError);
}

TEST(SolveSubsetSum, RejectsBadInstances) {
  EXPECT_THROW(solve_subset_sum({{0.1}, 0.1, 0.0}), DomainError);
  EXPECT_THROW(solve_subset_sum({{NAN}, 0.1, 0.1}), DomainError);
  EXPECT_THROW(solve_subset_sum({{0.1}, INFINITY, 0.1}), DomainError);
}

TEST(SolveSubsetSum, InfeasibleOptimumIsReturned) {
  const SubsetSumInstance inst{{0.1, 0.2}, 0.9, 0.01};
  const auto sel = solve_subset_sum(inst);
  EXPECT_FALSE(sel.feasible);
  EXPECT_EQ(sel.indices, (Indices{0, 1}));
  expect_consistent(inst, sel);
}

TEST(SolveSubsetSum, TwentyOneUniformValuesHitOnePercent) {
  std::size_t hits = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng = make_rng(5, "test.n21", t);
    std::uniform_real_distribution<double> u(-1.0, 1.0), w(-0.5, 0.5);
    SubsetSumInstance inst{std::vector<double>(21), 0.0, 0.01};
    for (double& v : inst.values) v = u(rng);
    inst.target = w(rng);
    if (solve_subset_sum(inst).feasible) ++hits;
  }
  EXPECT_GE(hits, 990u);
}

TEST(SolveSubsetSum, LargeInstancesAreConsistent) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = random_instance(seed, 30 + seed);
    expect_consistent(inst, solve_subset_sum(inst));
  }
}

TEST(EnumerateSums, SmallCases) {
  EXPECT_EQ(enumerate_sums({}), (std::vector<double>{0.0}));
  EXPECT_EQ(enumerate_sums(std::vector<double>{0.5}), (std::vector<double>{0.0, 0.5}));
  const auto s = enumerate_sums(std::vector<double>{0.3, -0.2});
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0], -0.2);
  EXPECT_EQ(s[1], 0.0);
  EXPECT_NEAR(s[2], 0.1, 1e-15);
  EXPECT_EQ(s[3], 0.3);
}

TEST(EnumerateSums, MatchesReferenceEnumeration) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto inst = random_instance(seed, seed % 13);
    const auto s = enumerate_sums(inst.values);
    const auto ref = oracle::all_sums(inst.values);
    ASSERT_EQ(s.size(), std::size_t{1} << inst.values.size());
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_NE(std::find(s.begin(), s.end(), 0.0), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(s[i], ref[i], 1e-12);
  }
  EXPECT_THROW(enumerate_sums(std::vector<double>(27, 0.1)), CapacityError);
}
