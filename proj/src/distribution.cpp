#include "lottery/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "lottery/errors.hpp"

namespace lottery {
namespace {

// CDF of X·Y, X ~ U[0,1], Y ~ U[-1,1].
//   F(z) = ½ + z/2 + z·ln(1/z)/2   on (0, 1]
// and F(-z) = 1 - F(z). The ½ accounts for the mass with Y < 0.
double product_uniform_cdf(double z) {
  if (z <= -1.0) return 0.0;
  if (z >= 1.0) return 1.0;
  if (z == 0.0) return 0.5;
  const double a = std::abs(z);
  const double upper = 0.5 + 0.5 * a * (1.0 - std::log(a));
  return z > 0 ? upper : 1.0 - upper;
}

double product_uniform_pdf(double z) {
  if (z == 0.0) {
    throw DomainError("product_uniform density is singular at z = 0");
  }
  const double a = std::abs(z);
  if (a >= 1.0) return 0.0;
  return 0.5 * std::log(1.0 / a);
}

double normal_pdf(double z, double mean, double sd) {
  const double t = (z - mean) / sd;
  return std::exp(-0.5 * t * t) / (sd * std::sqrt(2.0 * std::numbers::pi));
}

double laplace_pdf(double z, double mean, double scale) {
  return std::exp(-std::abs(z - mean) / scale) / (2.0 * scale);
}

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError("bad distribution parameter '" + item + "'");
    }
  }
  return out;
}

}  // namespace

Distribution Distribution::uniform(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("uniform distribution needs finite lo < hi");
  }
  return {Kind::kUniform, lo, hi};
}

Distribution Distribution::normal(double mean, double stddev) {
  if (!(stddev > 0) || !std::isfinite(mean)) {
    throw DomainError("normal distribution needs stddev > 0");
  }
  return {Kind::kNormal, mean, stddev};
}

Distribution Distribution::laplace(double mean, double scale) {
  if (!(scale > 0) || !std::isfinite(mean)) {
    throw DomainError("laplace distribution needs scale > 0");
  }
  return {Kind::kLaplace, mean, scale};
}

Distribution Distribution::product_uniform() { return {Kind::kProductUniform, 0, 0}; }

Distribution Distribution::half_product_atom() { return {Kind::kHalfProductAtom, 0, 0}; }

Distribution Distribution::parse(const std::string& tag) {
  const auto colon = tag.find(':');
  const std::string name = tag.substr(0, colon);
  const std::vector<double> params =
      colon == std::string::npos ? std::vector<double>{} : parse_params(tag.substr(colon + 1));

  auto expect = [&](std::size_t n) {
    if (!params.empty() && params.size() != n) {
      throw ValidationError("distribution '" + name + "' takes " + std::to_string(n) +
                            " parameters");
    }
  };
  try {
    if (name == "uniform") {
      expect(2);
      return params.empty() ? uniform() : uniform(params[0], params[1]);
    }
    if (name == "normal") {
      expect(2);
      return params.empty() ? normal() : normal(params[0], params[1]);
    }
    if (name == "laplace") {
      expect(2);
      return params.empty() ? laplace() : laplace(params[0], params[1]);
    }
  } catch (const DomainError& e) {
    throw ValidationError(e.what());
  }
  if (name == "product_uniform" && params.empty()) return product_uniform();
  if (name == "half_product_atom" && params.empty()) return half_product_atom();
  throw ValidationError("unknown distribution '" + tag +
                        "' (expected uniform, normal, laplace, product_uniform, "
                        "half_product_atom)");
}

std::string Distribution::tag() const {
  auto two = [this](const char* name) {
    std::ostringstream os;
    os.precision(17);
    os << name << ':' << p1_ << ',' << p2_;
    return os.str();
  };
  switch (kind_) {
    case Kind::kUniform: return two("uniform");
    case Kind::kNormal: return two("normal");
    case Kind::kLaplace: return two("laplace");
    case Kind::kProductUniform: return "product_uniform";
    case Kind::kHalfProductAtom: return "half_product_atom";
  }
  return {};
}

double Distribution::pdf(double z) const {
  switch (kind_) {
    case Kind::kUniform: return (z >= p1_ && z <= p2_) ? 1.0 / (p2_ - p1_) : 0.0;
    case Kind::kNormal: return normal_pdf(z, p1_, p2_);
    case Kind::kLaplace: return laplace_pdf(z, p1_, p2_);
    case Kind::kProductUniform: return product_uniform_pdf(z);
    case Kind::kHalfProductAtom: return 0.5 * product_uniform_pdf(z);
  }
  return 0.0;
}

double Distribution::cdf(double z) const {
  switch (kind_) {
    case Kind::kUniform: return std::clamp((z - p1_) / (p2_ - p1_), 0.0, 1.0);
    case Kind::kNormal: return 0.5 * std::erfc(-(z - p1_) / (p2_ * std::numbers::sqrt2));
    case Kind::kLaplace: {
      const double t = (z - p1_) / p2_;
      return t < 0 ? 0.5 * std::exp(t) : 1.0 - 0.5 * std::exp(-t);
    }
    case Kind::kProductUniform: return product_uniform_cdf(z);
    case Kind::kHalfProductAtom:
      return 0.5 * (z >= 0.0 ? 1.0 : 0.0) + 0.5 * product_uniform_cdf(z);
  }
  return 0.0;
}

double Distribution::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::kUniform: return std::uniform_real_distribution<double>(p1_, p2_)(rng);
    case Kind::kNormal: return std::normal_distribution<double>(p1_, p2_)(rng);
    case Kind::kLaplace: {
      const double u = std::uniform_real_distribution<double>(-0.5, 0.5)(rng);
      const double sign = u < 0 ? -1.0 : 1.0;
      return p1_ - p2_ * sign * std::log1p(-2.0 * std::abs(u));
    }
    case Kind::kProductUniform: {
      const double x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      const double y = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
      return x * y;
    }
    case Kind::kHalfProductAtom: {
      // Same draw order as b·a⁺ with a, b ~ U[-1,1]: a ≤ 0 prunes the term.
      const double a = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
      const double b = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
      return a > 0 ? a * b : 0.0;
    }
  }
  return 0.0;
}

std::pair<double, double> Distribution::uniform_certificate() const {
  switch (kind_) {
    case Kind::kUniform: {
      if (!(p1_ < 0 && p2_ > 0)) {
        throw DomainError("uniform certificate needs an interval containing 0 in its interior");
      }
      const double c = std::min(-p1_, p2_);
      return {2.0 * c / (p2_ - p1_), c};
    }
    case Kind::kNormal:
    case Kind::kLaplace: {
      // Unimodal about the mean: the density minimum on [-c, c] sits at the
      // endpoint farther from the mean.
      const double c = p2_;
      const double far = p1_ >= 0 ? -c : c;
      return {2.0 * c * pdf(far), c};
    }
    case Kind::kProductUniform: return {0.5 * std::numbers::ln2, 0.5};
    case Kind::kHalfProductAtom: return {0.25 * std::numbers::ln2, 0.5};
  }
  return {0.0, 0.0};
}

}  // namespace lottery
