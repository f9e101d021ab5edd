#include "lottery/evalbench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <tuple>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "lottery/errors.hpp"
#include "lottery/parallel.hpp"
#include "lottery/rng.hpp"

namespace lottery {

double sup_error_estimate(const DenseNetwork& f, const DenseNetwork& g, const MaskSet& masks,
                          std::size_t n_samples, std::uint64_t seed) {
  if (f.input_dim() != g.input_dim() || f.output_dim() != g.output_dim()) {
    throw ShapeError("networks disagree on input/output dimensions");
  }
  const DenseNetwork pruned = apply_masks(g, masks);
  const std::vector<Vector> xs = sample_unit_sphere(f.input_dim(), seed, n_samples);
  std::vector<double> errors(n_samples, 0.0);
  parallel_for(n_samples, [&](std::size_t s) {
    const Vector a = forward(f, xs[s]);
    const Vector b = forward(pruned, xs[s]);
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    errors[s] = std::sqrt(acc);
  });
  return errors.empty() ? 0.0 : *std::max_element(errors.begin(), errors.end());
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("fit_line needs two equally long series with at least 2 points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw DomainError("fit_line needs at least two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

SweepRow minimal_coverage_n(double eps, double delta, const Distribution& dist,
                            std::size_t trials, std::uint64_t seed,
                            const CoverageTarget& target) {
  if (!(eps > 0 && eps < 1)) throw DomainError("epsilon must lie in (0, 1)");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
  if (target.max_n < 1) throw DomainError("search cap must be at least 1");

  std::map<std::size_t, CoverageEstimate> cache;
  auto estimate = [&](std::size_t n) -> const CoverageEstimate& {
    auto it = cache.find(n);
    if (it == cache.end()) {
      it = cache.emplace(n, estimate_coverage_probability(dist, n, eps, target.lo, target.hi,
                                                          trials, seed))
               .first;
    }
    return it->second;
  };
  auto good = [&](std::size_t n) { return estimate(n).prob >= 1.0 - delta; };

  SweepRow row;
  row.epsilon = eps;
  row.delta = delta;
  row.dist_tag = dist.tag();
  row.seed = seed;
  if (!good(target.max_n)) {
    row.saturated = true;
    row.minimal_n = target.max_n;
  } else {
    std::size_t lo = 0;  // known bad (n = 0 covers nothing but {0})
    std::size_t hi = target.max_n;
    while (hi - lo > 1) {
      const std::size_t mid = lo + (hi - lo) / 2;
      (good(mid) ? hi : lo) = mid;
    }
    row.minimal_n = hi;
  }
  row.estimate = estimate(row.minimal_n);
  return row;
}

SweepResult lueker_sweep(std::span<const double> eps_list, double delta,
                         const Distribution& dist, std::size_t trials, std::uint64_t seed,
                         const CoverageTarget& target) {
  SweepResult result;
  std::vector<double> log_inv_eps;
  std::vector<double> ns;
  for (double eps : eps_list) {
    result.rows.push_back(minimal_coverage_n(eps, delta, dist, trials, seed, target));
    log_inv_eps.push_back(std::log(1.0 / eps));
    ns.push_back(static_cast<double>(result.rows.back().minimal_n));
  }
  if (ns.size() >= 2) result.fit = fit_line(log_inv_eps, ns);
  return result;
}

Calibration calibrate_c(double delta, double eps, const Distribution& dist, std::size_t trials,
                        std::uint64_t seed, const CoverageTarget& target) {
  Calibration cal;
  cal.row = minimal_coverage_n(eps, delta, dist, trials, seed, target);
  if (cal.row.saturated) {
    throw CapacityError("calibration saturated: coverage stays below 1 - delta up to n = " +
                        std::to_string(target.max_n));
  }
  cal.constant_c =
      static_cast<double>(cal.row.minimal_n) / std::log(2.0 / std::min(eps, delta));
  return cal;
}

std::vector<WeightRow> per_weight_report(const DenseNetwork& target, std::size_t n, double eps,
                                         const Distribution& dist, std::uint64_t seed) {
  if (!(eps > 0)) throw DomainError("epsilon must be positive");
  std::vector<WeightRow> rows;
  for (std::size_t l = 0; l < target.depth(); ++l) {
    const DenseMatrix& w = target.layer(l);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      for (std::size_t j = 0; j < w.cols(); ++j) rows.push_back({l, i, j, w(i, j)});
    }
  }
  parallel_for(rows.size(), [&](std::size_t k) {
    Rng rng = make_rng(seed, "per_weight", k);
    SubsetSumInstance inst{std::vector<double>(n), rows[k].target, eps};
    for (double& v : inst.values) v = dist.sample(rng);
    const SubsetSelection sel = solve_subset_sum(inst);
    rows[k].achieved_error = sel.abs_error;
    rows[k].subset_size = sel.indices.size();
    rows[k].feasible = sel.feasible;
  });
  return rows;
}

double ks_statistic(std::vector<double> samples, const Distribution& dist) {
  if (samples.empty()) throw DomainError("KS statistic needs at least one sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < samples.size()) {
    const double x = samples[i];
    std::size_t j = i;
    while (j < samples.size() && samples[j] == x) ++j;
    const double f_left = dist.cdf(std::nextafter(x, -std::numeric_limits<double>::infinity()));
    const double f_right = dist.cdf(x);
    d = std::max({d, std::abs(static_cast<double>(i) / n - f_left),
                  std::abs(static_cast<double>(j) / n - f_right)});
    i = j;
  }
  return d;
}

namespace {

double pdf_mass(const Distribution& dist) {
  using boost::math::quadrature::gauss_kronrod;
  auto f = [&](double z) { return z == 0.0 ? 0.0 : dist.pdf(z); };
  constexpr double kInf = std::numeric_limits<double>::infinity();
  switch (dist.kind()) {
    case Distribution::Kind::kUniform:
      return gauss_kronrod<double, 15>::integrate(f, dist.param1(), dist.param2(), 10, 1e-12);
    case Distribution::Kind::kNormal:
    case Distribution::Kind::kLaplace: {
      const double m = dist.param1();
      return gauss_kronrod<double, 61>::integrate(f, -kInf, m, 15, 1e-12) +
             gauss_kronrod<double, 61>::integrate(f, m, kInf, 15, 1e-12);
    }
    case Distribution::Kind::kProductUniform:
    case Distribution::Kind::kHalfProductAtom: {
      // Logarithmic singularity at 0: tanh-sinh handles endpoint blow-ups.
      boost::math::quadrature::tanh_sinh<double> ts;
      return ts.integrate(f, -1.0, 0.0) + ts.integrate(f, 0.0, 1.0);
    }
  }
  return 0.0;
}

}  // namespace

DensityCheck density_check(const Distribution& dist, std::size_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw DomainError("density check needs at least one sample");
  DensityCheck out;
  out.dist_tag = dist.tag();
  out.integral = pdf_mass(dist);
  out.expected_mass = dist.kind() == Distribution::Kind::kHalfProductAtom ? 0.5 : 1.0;

  Rng rng = make_rng(seed, "density_check");
  std::vector<double> draws(n_samples);
  for (double& x : draws) x = dist.sample(rng);
  out.samples = n_samples;
  out.ks_statistic = ks_statistic(std::move(draws), dist);
  out.ks_critical = 1.62762 / std::sqrt(static_cast<double>(n_samples));

  std::tie(out.alpha, out.c) = dist.uniform_certificate();
  constexpr std::size_t kPerSide = 5000;
  constexpr double kInner = 1e-9;
  out.grid_min_pdf = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < kPerSide; ++k) {
    const double r = out.c - (out.c - kInner) * static_cast<double>(kPerSide - 1 - k) / (kPerSide - 1);
    out.grid_min_pdf = std::min({out.grid_min_pdf, dist.pdf(r), dist.pdf(-r)});
  }
  out.grid_points = 2 * kPerSide;
  return out;
}

}  // namespace lottery
