#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lottery/gadgets.hpp"
#include "lottery/tensor.hpp"

namespace lottery {

/// Default width constant (natural-log formulas).
inline constexpr double kDefaultWidthConstant = 10.0;

/// Shapes of the random 2l-layer network that is pruned to a target of
/// widths [d_0, ..., d_l].
///
/// Hidden layer i holds d_{i-1} blocks of k_i units, where k_i is
/// ⌈C·ln(d_{i-1}·d_i·l / min(ε, δ))⌉ rounded up to an even number; half of
/// each block serves the positive branch and half the negative one.
struct WidthPlan {
  std::vector<std::size_t> target_widths;  // d_0 .. d_l
  std::vector<std::size_t> random_widths;  // d_0, h_1, d_1, ..., h_l, d_l
  std::vector<std::size_t> block_sizes;    // k_1 .. k_l
  double epsilon = 0.0;
  double delta = 0.0;
  double per_layer_eps = 0.0;  // ε / 2l
  double constant_c = 0.0;

  std::size_t depth() const noexcept { return target_widths.size() - 1; }
};

WidthPlan width_plan(std::span<const std::size_t> target_widths, double eps, double delta,
                     double c);

/// (1 + e)^l - 1 for the uniform per-layer budget e = ε/2l. Throws
/// DomainError unless 0 <= 2·l·e < 1.
double composition_error_bound(double per_layer_eps, std::size_t l);

/// Π(1 + e_i) - 1: end-to-end error of a network whose layer i is
/// approximated to e_i (relative to its input norm) while every target
/// layer has spectral norm <= 1.
double composition_error_bound(std::span<const double> per_layer_errors);

struct ApproxReport {
  /// Achieved per-layer error ledgers (sum of link errors).
  std::vector<double> per_layer_errors;
  double per_layer_budget = 0.0;    // ε / 2l
  double theoretical_budget = 0.0;  // (1 + ε/2l)^l - 1
  double achieved_bound = 0.0;      // Π(1 + per_layer_errors) - 1
  double measured_sup_error = 0.0;
  std::size_t infeasible_count = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// One report per target layer.
  std::vector<LayerGadgetReport> layers;
};

struct PrunedNetwork {
  WidthPlan plan;
  DenseNetwork random_net;
  MaskSet masks;
  ApproxReport report;
};

inline constexpr std::size_t kDefaultSupSamples = 10000;

/// Draws a U[-1,1] network shaped by width_plan and prunes it layer by
/// layer so that its masked forward pass approximates `target` on the unit
/// ball. Budget misses are counted in the report, never thrown.
PrunedNetwork prune_to_approximate(const DenseNetwork& target, double eps, double delta,
                                   double c, std::uint64_t seed,
                                   std::size_t sup_samples = kDefaultSupSamples);

/// Width below which a 2-layer network cannot be pruned to approximate every
/// d x d linear map of norm <= 1 to within ε: (d²·log₂(1/2ε) - 1) / 2d.
double lower_bound_min_width(std::size_t d, double eps);

/// Parameter count below which that is impossible at any depth:
/// d²·log₂(1/2ε) - 1.
double lower_bound_min_params(std::size_t d, double eps);

}  // namespace lottery
