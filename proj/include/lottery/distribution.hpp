#pragma once

#include <string>
#include <utility>

#include "lottery/rng.hpp"

namespace lottery {

/// Univariate weight / coefficient distributions.
///
/// product_uniform is the law of X·Y with X ~ U[0,1], Y ~ U[-1,1]: the law of
/// b·a⁺ conditioned on a > 0, density ½·ln(1/|z|) on [-1,1].
/// half_product_atom is ½·δ₀ + ½·product_uniform, the unconditioned law of
/// b·a⁺ (and of d·c⁻) when a, b, c, d ~ U[-1,1].
class Distribution {
 public:
  enum class Kind { kUniform, kNormal, kLaplace, kProductUniform, kHalfProductAtom };

  static Distribution uniform(double lo = -1.0, double hi = 1.0);
  static Distribution normal(double mean = 0.0, double stddev = 1.0);
  /// Defaults to zero mean, unit variance (scale 1/√2).
  static Distribution laplace(double mean = 0.0, double scale = 0.70710678118654752);
  static Distribution product_uniform();
  static Distribution half_product_atom();

  /// Parses "uniform", "uniform:-1,1", "normal", "normal:0,1", "laplace",
  /// "laplace:0,0.5", "product_uniform", "half_product_atom".
  static Distribution parse(const std::string& tag);

  Kind kind() const noexcept { return kind_; }
  /// First / second parameter: (lo, hi), (mean, stddev), (mean, scale).
  double param1() const noexcept { return p1_; }
  double param2() const noexcept { return p2_; }

  /// Canonical tag accepted by parse().
  std::string tag() const;

  /// Density of the continuous part. For half_product_atom this is
  /// ½·pdf(product_uniform); the atom at 0 carries no density. Throws
  /// DomainError at z = 0 for the two product laws (log singularity).
  double pdf(double z) const;
  /// Full CDF including any atom.
  double cdf(double z) const;
  double sample(Rng& rng) const;

  /// (alpha, c) with density ≥ alpha / (2c) on [-c, c], i.e. the law
  /// contains alpha·U[-c, c] as a mixture component.
  std::pair<double, double> uniform_certificate() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Distribution(Kind kind, double p1, double p2) : kind_(kind), p1_(p1), p2_(p2) {}

  Kind kind_;
  double p1_;
  double p2_;
};

/// Free-function spellings of the Distribution members.
inline double pdf(const Distribution& d, double z) { return d.pdf(z); }
inline double cdf(const Distribution& d, double z) { return d.cdf(z); }
inline double sample(const Distribution& d, Rng& rng) { return d.sample(rng); }
inline std::pair<double, double> contains_uniform_certificate(const Distribution& d) {
  return d.uniform_certificate();
}

}  // namespace lottery
