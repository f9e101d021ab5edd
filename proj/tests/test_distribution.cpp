#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <boost/math/distributions/laplace.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lottery/distribution.hpp"
#include "lottery/errors.hpp"
#include "oracles.hpp"

using namespace lottery;

namespace {

constexpr double kHalfLn2 = 0.5 * std::numbers::ln2;

std::vector<double> draws(const Distribution& d, std::size_t n, std::uint64_t seed) {
  Rng rng = make_rng(seed, "test.draws");
  std::vector<double> xs(n);
  for (double& x : xs) x = d.sample(rng);
  return xs;
}

// Adaptive Gauss-Kronrod on (a, b); the log singularity at 0 is kept at an
// endpoint so the rule never evaluates it.
double integrate_pdf(const Distribution& d, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      [&](double z) { return d.pdf(z); }, a, b, 30, 1e-13);
}

}  // namespace

TEST(ProductUniform, PdfValues) {
  const auto p = Distribution::product_uniform();
  EXPECT_DOUBLE_EQ(p.pdf(0.5), kHalfLn2);
  EXPECT_NEAR(p.pdf(0.5), 0.346574, 1e-6);
  EXPECT_DOUBLE_EQ(p.pdf(-0.5), kHalfLn2);
  EXPECT_EQ(p.pdf(1.0), 0.0);
  EXPECT_EQ(p.pdf(1.5), 0.0);
  EXPECT_THROW(p.pdf(0.0), DomainError);
}

TEST(ProductUniform, CdfEndpointsAndSymmetry) {
  const auto p = Distribution::product_uniform();
  EXPECT_DOUBLE_EQ(p.cdf(0.0), 0.5);
  EXPECT_DOUBLE_EQ(p.cdf(1.0), 1.0);
  EXPECT_DOUBLE_EQ(p.cdf(-1.0), 0.0);
  EXPECT_EQ(p.cdf(2.0), 1.0);
  EXPECT_EQ(p.cdf(-2.0), 0.0);
  for (double z : {0.01, 0.2, 0.5, 0.9}) EXPECT_NEAR(p.cdf(z) + p.cdf(-z), 1.0, 1e-15);
}

TEST(ProductUniform, PdfIntegratesToOne) {
  const auto p = Distribution::product_uniform();
  EXPECT_NEAR(integrate_pdf(p, -1.0, 0.0) + integrate_pdf(p, 0.0, 1.0), 1.0, 1e-6);
}

TEST(ProductUniform, CdfIsIntegralOfPdf) {
  const auto p = Distribution::product_uniform();
  for (double z : {0.05, 0.3, 0.5, 0.77, 1.0}) {
    EXPECT_NEAR(p.cdf(z) - 0.5, integrate_pdf(p, 0.0, z), 1e-9) << z;
  }
}

TEST(ProductUniform, DensityFloorOnHalfInterval) {
  const auto p = Distribution::product_uniform();
  for (std::size_t k = 0; k < 10000; ++k) {
    const double r = 1e-9 + (0.5 - 1e-9) * static_cast<double>(k % 5000) / 4999.0;
    const double z = k < 5000 ? r : -r;
    EXPECT_GE(p.pdf(z), kHalfLn2 * (1 - 1e-12)) << z;
  }
}

TEST(ProductUniform, SamplerPassesKolmogorovSmirnov) {
  const auto p = Distribution::product_uniform();
  const std::size_t n = 100000;
  const auto xs = draws(p, n, 1);
  EXPECT_LT(oracle::ks_distance(xs, [&](double z) { return p.cdf(z); }),
            oracle::ks_critical_001(n));
}

TEST(ProductUniform, SamplerMatchesProductOfUniforms) {
  // Reference law built directly from X ~ U[0,1], Y ~ U[-1,1].
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> u01(0.0, 1.0), u11(-1.0, 1.0);
  std::vector<double> ref(50000);
  for (double& v : ref) v = u01(gen) * u11(gen);
  std::sort(ref.begin(), ref.end());
  const auto p = Distribution::product_uniform();
  const auto empirical = [&](double z) {
    return static_cast<double>(std::upper_bound(ref.begin(), ref.end(), z) - ref.begin()) /
           static_cast<double>(ref.size());
  };
  for (double z : {-0.9, -0.5, -0.1, -0.01, 0.01, 0.1, 0.5, 0.9}) {
    EXPECT_NEAR(empirical(z), p.cdf(z), 0.01) << z;
  }
}

TEST(HalfProductAtom, AtomAndContinuousPart) {
  const auto h = Distribution::half_product_atom();
  EXPECT_DOUBLE_EQ(h.pdf(0.5), 0.5 * kHalfLn2);
  EXPECT_DOUBLE_EQ(h.cdf(0.0), 0.75);
  EXPECT_DOUBLE_EQ(h.cdf(std::nextafter(0.0, -1.0)), 0.25);
  EXPECT_NEAR(integrate_pdf(h, -1.0, 0.0) + integrate_pdf(h, 0.0, 1.0), 0.5, 1e-6);

  const std::size_t n = 100000;
  const auto xs = draws(h, n, 2);
  const double zeros = static_cast<double>(std::count(xs.begin(), xs.end(), 0.0));
  EXPECT_NEAR(zeros / n, 0.5, 4 * std::sqrt(0.25 / n));
  std::vector<double> nonzero;
  for (double x : xs) {
    if (x != 0.0) nonzero.push_back(x);
  }
  const auto p = Distribution::product_uniform();
  EXPECT_LT(oracle::ks_distance(nonzero, [&](double z) { return p.cdf(z); }),
            oracle::ks_critical_001(nonzero.size()));
}

TEST(Normal, MatchesReferenceLaw) {
  const auto d = Distribution::normal(0.3, 2.0);
  const boost::math::normal_distribution<double> ref(0.3, 2.0);
  for (double z : {-4.0, -1.0, 0.0, 0.3, 2.5}) {
    EXPECT_NEAR(d.pdf(z), boost::math::pdf(ref, z), 1e-15);
    EXPECT_NEAR(d.cdf(z), boost::math::cdf(ref, z), 1e-15);
  }
  const auto xs = draws(d, 50000, 3);
  EXPECT_LT(oracle::ks_distance(xs, [&](double z) { return boost::math::cdf(ref, z); }),
            oracle::ks_critical_001(xs.size()));
}

TEST(Laplace, MatchesReferenceLaw) {
  const auto d = Distribution::laplace();
  const boost::math::laplace_distribution<double> ref(0.0, 1.0 / std::sqrt(2.0));
  for (double z : {-3.0, -0.2, 0.0, 0.7}) {
    EXPECT_NEAR(d.pdf(z), boost::math::pdf(ref, z), 1e-15);
    EXPECT_NEAR(d.cdf(z), boost::math::cdf(ref, z), 1e-15);
  }
  const auto xs = draws(d, 50000, 4);
  EXPECT_LT(oracle::ks_distance(xs, [&](double z) { return boost::math::cdf(ref, z); }),
            oracle::ks_critical_001(xs.size()));
  double var = 0.0;
  for (double x : xs) var += x * x;
  EXPECT_NEAR(var / xs.size(), 1.0, 0.05);
}

TEST(Uniform, SupportAndLaw) {
  const auto d = Distribution::uniform(-1.0, 3.0);
  EXPECT_EQ(d.pdf(0.0), 0.25);
  EXPECT_EQ(d.pdf(3.5), 0.0);
  EXPECT_EQ(d.cdf(1.0), 0.5);
  for (double x : draws(d, 1000, 5)) {
    EXPECT_GE(x, -1.0);
    EXPECT_LT(x, 3.0);
  }
  EXPECT_THROW(Distribution::uniform(1.0, 1.0), DomainError);
}

TEST(Certificate, KnownPairs) {
  auto [a, c] = contains_uniform_certificate(Distribution::product_uniform());
  EXPECT_DOUBLE_EQ(a, kHalfLn2);
  EXPECT_DOUBLE_EQ(c, 0.5);
  std::tie(a, c) = contains_uniform_certificate(Distribution::uniform());
  EXPECT_DOUBLE_EQ(a, 1.0);
  EXPECT_DOUBLE_EQ(c, 1.0);
  std::tie(a, c) = contains_uniform_certificate(Distribution::normal());
  EXPECT_NEAR(a, 2 * 0.2419707245191434, 1e-15);
  EXPECT_NEAR(a, 0.48394, 1e-5);
  EXPECT_DOUBLE_EQ(c, 1.0);
  std::tie(a, c) = contains_uniform_certificate(Distribution::half_product_atom());
  EXPECT_DOUBLE_EQ(a, 0.5 * kHalfLn2);
  EXPECT_DOUBLE_EQ(c, 0.5);
  EXPECT_THROW(contains_uniform_certificate(Distribution::uniform(0.0, 1.0)), DomainError);
}

TEST(Certificate, DensityDominatesUniformComponent) {
  for (const auto& d : {Distribution::uniform(-1, 2), Distribution::normal(0.5, 1.5),
                        Distribution::laplace(-0.2, 0.8), Distribution::product_uniform(),
                        Distribution::half_product_atom()}) {
    const auto [alpha, c] = d.uniform_certificate();
    EXPECT_GT(alpha, 0.0);
    EXPECT_LE(alpha, 1.0);
    for (int k = 1; k <= 1000; ++k) {
      const double z = c * (2.0 * k / 1001.0 - 1.0);
      if (z == 0.0) continue;
      EXPECT_GE(d.pdf(z), alpha / (2 * c) * (1 - 1e-12)) << d.tag() << " at " << z;
    }
  }
}

TEST(Parse, RoundTripsTags) {
  for (const char* tag : {"uniform", "uniform:-0.5,2", "normal", "normal:1,3", "laplace",
                          "laplace:0,0.5", "product_uniform", "half_product_atom"}) {
    const auto d = Distribution::parse(tag);
    EXPECT_EQ(Distribution::parse(d.tag()), d) << tag;
  }
  EXPECT_EQ(Distribution::parse("uniform"), Distribution::uniform(-1, 1));
}

TEST(Parse, RejectsBadTags) {
  for (const char* tag : {"", "gauss", "uniform:1", "uniform:1,-1", "normal:0,-1",
                          "normal:a,b", "product_uniform:1", "laplace:0,0"}) {
    EXPECT_THROW(Distribution::parse(tag), ValidationError) << tag;
  }
}
