#include "lottery/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lottery/distribution.hpp"
#include "lottery/errors.hpp"
#include "lottery/evalbench.hpp"
#include "lottery/rng.hpp"

namespace lottery {
namespace {

void check_eps_delta(double eps, double delta) {
  if (!(eps > 0 && eps < 1)) throw DomainError("epsilon must lie in (0, 1)");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
}

}  // namespace

WidthPlan width_plan(std::span<const std::size_t> target_widths, double eps, double delta,
                     double c) {
  check_eps_delta(eps, delta);
  if (!(c > 0)) throw DomainError("width constant C must be positive");
  if (target_widths.size() < 2) throw ShapeError("target needs at least one layer");
  if (std::find(target_widths.begin(), target_widths.end(), 0) != target_widths.end()) {
    throw ShapeError("target widths must be positive");
  }

  WidthPlan plan;
  plan.target_widths.assign(target_widths.begin(), target_widths.end());
  plan.epsilon = eps;
  plan.delta = delta;
  plan.constant_c = c;
  const std::size_t l = plan.depth();
  plan.per_layer_eps = eps / (2.0 * static_cast<double>(l));

  const double floor_eps = std::min(eps, delta);
  plan.random_widths.push_back(target_widths[0]);
  for (std::size_t i = 1; i <= l; ++i) {
    const double d_in = static_cast<double>(target_widths[i - 1]);
    const double d_out = static_cast<double>(target_widths[i]);
    const double log_term = std::log(d_in * d_out * static_cast<double>(l) / floor_eps);
    auto k = static_cast<std::size_t>(std::ceil(c * log_term));
    k = std::max<std::size_t>(2, k + (k % 2));
    plan.block_sizes.push_back(k);
    plan.random_widths.push_back(target_widths[i - 1] * k);
    plan.random_widths.push_back(target_widths[i]);
  }
  return plan;
}

double composition_error_bound(double per_layer_eps, std::size_t l) {
  if (l == 0) throw DomainError("depth must be at least 1");
  if (!(per_layer_eps >= 0)) throw DomainError("per-layer error must be non-negative");
  if (!(2.0 * static_cast<double>(l) * per_layer_eps < 1.0)) {
    throw DomainError("composition bound requires epsilon = 2·l·per_layer_eps < 1");
  }
  return std::expm1(static_cast<double>(l) * std::log1p(per_layer_eps));
}

double composition_error_bound(std::span<const double> per_layer_errors) {
  double log_growth = 0.0;
  for (double e : per_layer_errors) {
    if (!(e >= 0)) throw DomainError("per-layer errors must be non-negative");
    log_growth += std::log1p(e);
  }
  return std::expm1(log_growth);
}

PrunedNetwork prune_to_approximate(const DenseNetwork& target, double eps, double delta,
                                   double c, std::uint64_t seed, std::size_t sup_samples) {
  check_eps_delta(eps, delta);
  for (std::size_t i = 0; i < target.depth(); ++i) {
    if (spectral_norm(target.layer(i)) > 1.0 + 1e-6) {
      throw DomainError("target layer " + std::to_string(i) +
                        " has spectral norm > 1; normalize the network first");
    }
  }

  PrunedNetwork out;
  const std::vector<std::size_t> widths = target.widths();
  out.plan = width_plan(widths, eps, delta, c);
  out.random_net = random_network(out.plan.random_widths, Distribution::uniform(-1.0, 1.0),
                                  derive_seed(seed, "prune.random"));

  const std::size_t l = target.depth();
  ApproxReport& report = out.report;
  report.per_layer_budget = out.plan.per_layer_eps;
  report.theoretical_budget = composition_error_bound(out.plan.per_layer_eps, l);
  report.seed = seed;
  report.samples = sup_samples;

  for (std::size_t i = 0; i < l; ++i) {
    LayerGadget layer =
        build_layer_gadget(target.layer(i), out.random_net.layer(2 * i),
                           out.random_net.layer(2 * i + 1), out.plan.per_layer_eps);
    out.masks.push_back(std::move(layer.plan.first_mask));
    out.masks.push_back(std::move(layer.plan.second_mask));
    report.per_layer_errors.push_back(layer.report.error_sum);
    report.infeasible_count += layer.report.infeasible_links;
    report.layers.push_back(std::move(layer.report));
  }
  report.achieved_bound = composition_error_bound(report.per_layer_errors);
  if (sup_samples > 0) {
    report.measured_sup_error = sup_error_estimate(target, out.random_net, out.masks,
                                                   sup_samples, derive_seed(seed, "prune.eval"));
  }
  return out;
}

double lower_bound_min_params(std::size_t d, double eps) {
  if (d == 0) throw DomainError("dimension must be at least 1");
  if (!(eps > 0 && eps < 0.5)) throw DomainError("lower bound needs 0 < epsilon < 1/2");
  const double dd = static_cast<double>(d);
  return dd * dd * std::log2(1.0 / (2.0 * eps)) - 1.0;
}

double lower_bound_min_width(std::size_t d, double eps) {
  return lower_bound_min_params(d, eps) / (2.0 * static_cast<double>(d));
}

}  // namespace lottery
