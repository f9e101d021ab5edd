#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lottery/tensor.hpp"

namespace lottery {

/// Two-layer network [I  -I] σ([W; -W] x), which computes W x exactly.
DenseNetwork linearize(const DenseMatrix& w);

/// Single-weight construction: x -> (v ⊙ s)ᵀ σ((t ⊙ u) x) approximating w·x.
///
/// u = [a; c] and v = [b; d] each hold 2n random weights. The first mask t
/// keeps a ≥ 0 in the top half and c ≤ 0 in the bottom half, so the top
/// half is silent for x ≤ 0 and the bottom half is silent for x ≥ 0. The
/// second mask s = [s1; s2] picks subsets of the products b_i·a_i⁺ and
/// d_i·c_i⁻, each solved exactly against the target w.
struct LinkGadget {
  std::vector<double> first_layer_weights;   // u = [a; c]
  std::vector<double> second_layer_weights;  // v = [b; d]
  std::vector<std::uint8_t> first_mask;
  std::vector<std::uint8_t> second_mask;
  double target = 0.0;
  /// |w - Σ_{s1} b_i a_i⁺| and |w - Σ_{s2} d_i c_i⁻|.
  double error_positive = 0.0;
  double error_negative = 0.0;
  /// ε_link; each branch is allotted half of it.
  double budget = 0.0;

  std::size_t half() const noexcept { return first_layer_weights.size() / 2; }
  bool feasible() const noexcept {
    return error_positive <= budget / 2 && error_negative <= budget / 2;
  }
  /// sup_{|x|≤1} |w x - evaluate(x)| is bounded by this sum.
  double error_bound() const noexcept { return error_positive + error_negative; }

  double evaluate(double x) const;
  double evaluate_positive_branch(double x) const;
  double evaluate_negative_branch(double x) const;
};

/// Throws DomainError if |w| > 1 or link_eps <= 0, ShapeError unless u and v
/// have the same even length >= 2. Infeasibility is reported, not thrown.
LinkGadget build_link_gadget(double w, std::span<const double> u, std::span<const double> v,
                             double link_eps);

/// Per-link outcome inside a neuron or layer construction.
struct LinkRecord {
  std::size_t out_idx = 0;
  std::size_t in_idx = 0;
  double target = 0.0;
  double error_positive = 0.0;
  double error_negative = 0.0;
  double branch_budget = 0.0;

  bool feasible_positive() const noexcept { return error_positive <= branch_budget; }
  bool feasible_negative() const noexcept { return error_negative <= branch_budget; }
};

struct LayerGadgetPlan {
  std::size_t block_size = 0;  // k, even
  std::size_t in_dim = 0;      // d1
  std::size_t out_dim = 0;     // d2
  BinaryMatrix first_mask;     // T, (d1·k) x d1
  BinaryMatrix second_mask;    // S, d2 x (d1·k)
};

struct LayerGadgetReport {
  /// ε / (d1·d2) for a layer, ε / d for a neuron.
  double link_budget = 0.0;
  /// Row-major over (out_idx, in_idx).
  std::vector<LinkRecord> links;
  std::size_t infeasible_links = 0;
  /// Σ over links of (error_positive + error_negative). On the ∞-ball,
  /// ‖W x - ĝ(x)‖₂ ≤ ‖W x - ĝ(x)‖₁ ≤ error_sum.
  double error_sum = 0.0;
};

struct LayerGadget {
  LayerGadgetPlan plan;
  LayerGadgetReport report;
};

/// Block-diagonal sign pattern T for an (d1·k) x d1 random matrix: rows
/// [j·k, (j+1)·k) keep only column j, the first k/2 of them where the
/// weight is ≥ 0 and the last k/2 where it is ≤ 0. Depends only on M.
BinaryMatrix block_first_mask(const DenseMatrix& m, std::size_t in_dim);

/// Prunes N σ(M x) to approximate W x on the ∞-ball with budget eps split
/// evenly over the d1·d2 links. W must have spectral norm ≤ 1.
LayerGadget build_layer_gadget(const DenseMatrix& w, const DenseMatrix& m, const DenseMatrix& n,
                               double eps);

struct NeuronGadget {
  BinaryMatrix first_mask;                // (d·k) x d
  std::vector<std::uint8_t> second_mask;  // d·k
  LayerGadgetReport report;
};

/// Prunes vᵀ σ(M x) to approximate wᵀ x with budget eps / d per coordinate.
NeuronGadget build_neuron_gadget(std::span<const double> w, const DenseMatrix& m,
                                 std::span<const double> v, double eps);

}  // namespace lottery
