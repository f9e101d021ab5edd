#include "lottery/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lottery/errors.hpp"
#include "lottery/parallel.hpp"
#include "lottery/subset_sum.hpp"

namespace lottery {
namespace {

double relu(double x) { return x >= 0.0 ? x : 0.0; }

double branch_output(const LinkGadget& g, std::size_t begin, std::size_t end, double x) {
  double acc = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    if (g.second_mask[i] == 0 || g.first_mask[i] == 0) continue;
    acc += g.second_layer_weights[i] * relu(g.first_layer_weights[i] * x);
  }
  return acc;
}

void check_block_layout(const DenseMatrix& m, std::size_t in_dim) {
  if (m.cols() != in_dim || in_dim == 0 || m.rows() % in_dim != 0) {
    throw ShapeError("first random layer must be (d·k) x d with d = " + std::to_string(in_dim) +
                     ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  const std::size_t k = m.rows() / in_dim;
  if (k < 2 || k % 2 != 0) {
    throw ShapeError("block size k = " + std::to_string(k) + " must be even and at least 2");
  }
}

LayerGadget build_blocks(const DenseMatrix& w, const DenseMatrix& m, const DenseMatrix& n,
                         double link_budget) {
  const std::size_t d2 = w.rows();
  const std::size_t d1 = w.cols();
  check_block_layout(m, d1);
  const std::size_t k = m.rows() / d1;
  if (n.rows() != d2 || n.cols() != m.rows()) {
    throw ShapeError("second random layer must be " + std::to_string(d2) + "x" +
                     std::to_string(m.rows()) + ", got " + std::to_string(n.rows()) + "x" +
                     std::to_string(n.cols()));
  }
  for (double x : w.entries()) {
    if (std::abs(x) > 1.0) throw DomainError("target weights must lie in [-1, 1]");
  }

  LayerGadget out;
  out.plan.block_size = k;
  out.plan.in_dim = d1;
  out.plan.out_dim = d2;
  out.plan.first_mask = block_first_mask(m, d1);
  out.plan.second_mask = BinaryMatrix(d2, m.rows());
  out.report.link_budget = link_budget;
  out.report.links.resize(d2 * d1);

  // The block-j slice of M is shared by every output neuron.
  std::vector<std::vector<double>> shared(d1, std::vector<double>(k));
  for (std::size_t j = 0; j < d1; ++j) {
    for (std::size_t r = 0; r < k; ++r) shared[j][r] = m(j * k + r, j);
  }

  std::vector<std::vector<std::uint8_t>> selections(d2 * d1);
  parallel_for(d2 * d1, [&](std::size_t pair) {
    const std::size_t i = pair / d1;
    const std::size_t j = pair % d1;
    const auto v = n.row(i).subspan(j * k, k);
    const LinkGadget link = build_link_gadget(w(i, j), shared[j], v, link_budget);
    selections[pair] = link.second_mask;
    out.report.links[pair] = LinkRecord{i,
                                        j,
                                        w(i, j),
                                        link.error_positive,
                                        link.error_negative,
                                        link_budget / 2};
  });

  for (std::size_t pair = 0; pair < d2 * d1; ++pair) {
    const std::size_t i = pair / d1;
    const std::size_t j = pair % d1;
    for (std::size_t r = 0; r < k; ++r) {
      out.plan.second_mask.set(i, j * k + r, selections[pair][r] != 0);
    }
    const LinkRecord& rec = out.report.links[pair];
    out.report.error_sum += rec.error_positive + rec.error_negative;
    if (!rec.feasible_positive() || !rec.feasible_negative()) ++out.report.infeasible_links;
  }
  return out;
}

}  // namespace

DenseNetwork linearize(const DenseMatrix& w) {
  const std::size_t r = w.rows();
  const std::size_t c = w.cols();
  DenseMatrix stacked(2 * r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      stacked(i, j) = w(i, j);
      stacked(r + i, j) = -w(i, j);
    }
  }
  DenseMatrix combine(r, 2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    combine(i, i) = 1.0;
    combine(i, r + i) = -1.0;
  }
  return DenseNetwork({std::move(stacked), std::move(combine)});
}

double LinkGadget::evaluate_positive_branch(double x) const {
  return branch_output(*this, 0, half(), x);
}

double LinkGadget::evaluate_negative_branch(double x) const {
  return branch_output(*this, half(), 2 * half(), x);
}

double LinkGadget::evaluate(double x) const {
  return evaluate_positive_branch(x) + evaluate_negative_branch(x);
}

LinkGadget build_link_gadget(double w, std::span<const double> u, std::span<const double> v,
                             double link_eps) {
  if (!(std::abs(w) <= 1.0)) throw DomainError("link target must satisfy |w| <= 1");
  if (!(link_eps > 0)) throw DomainError("link budget must be positive");
  if (u.size() != v.size() || u.size() < 2 || u.size() % 2 != 0) {
    throw ShapeError("link gadget needs u and v of equal even length >= 2, got " +
                     std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  const std::size_t n = u.size() / 2;

  LinkGadget g;
  g.first_layer_weights.assign(u.begin(), u.end());
  g.second_layer_weights.assign(v.begin(), v.end());
  g.first_mask.resize(2 * n);
  g.second_mask.assign(2 * n, 0);
  g.target = w;
  g.budget = link_eps;

  SubsetSumInstance pos{std::vector<double>(n), w, link_eps / 2};
  SubsetSumInstance neg{std::vector<double>(n), w, link_eps / 2};
  for (std::size_t i = 0; i < n; ++i) {
    const bool keep_a = u[i] >= 0.0;
    const bool keep_c = u[n + i] <= 0.0;
    g.first_mask[i] = keep_a ? 1 : 0;
    g.first_mask[n + i] = keep_c ? 1 : 0;
    pos.values[i] = keep_a ? v[i] * u[i] : 0.0;
    neg.values[i] = keep_c ? v[n + i] * u[n + i] : 0.0;
  }

  const SubsetSelection s1 = solve_subset_sum(pos);
  const SubsetSelection s2 = solve_subset_sum(neg);
  for (std::size_t i : s1.indices) g.second_mask[i] = 1;
  for (std::size_t i : s2.indices) g.second_mask[n + i] = 1;
  g.error_positive = s1.abs_error;
  g.error_negative = s2.abs_error;
  return g;
}

BinaryMatrix block_first_mask(const DenseMatrix& m, std::size_t in_dim) {
  check_block_layout(m, in_dim);
  const std::size_t k = m.rows() / in_dim;
  BinaryMatrix t(m.rows(), in_dim);
  for (std::size_t j = 0; j < in_dim; ++j) {
    for (std::size_t r = 0; r < k; ++r) {
      const double weight = m(j * k + r, j);
      t.set(j * k + r, j, r < k / 2 ? weight >= 0.0 : weight <= 0.0);
    }
  }
  return t;
}

LayerGadget build_layer_gadget(const DenseMatrix& w, const DenseMatrix& m, const DenseMatrix& n,
                               double eps) {
  if (!(eps > 0)) throw DomainError("layer budget must be positive");
  if (w.size() == 0) throw ShapeError("target layer is empty");
  // Slack for power-iteration error on already-normalized layers.
  if (spectral_norm(w) > 1.0 + 1e-6) {
    throw DomainError("target layer must have spectral norm <= 1");
  }
  const double pairs = static_cast<double>(w.rows() * w.cols());
  return build_blocks(w, m, n, eps / pairs);
}

NeuronGadget build_neuron_gadget(std::span<const double> w, const DenseMatrix& m,
                                 std::span<const double> v, double eps) {
  if (!(eps > 0)) throw DomainError("neuron budget must be positive");
  if (w.empty()) throw ShapeError("neuron needs at least one input weight");
  if (v.size() != m.rows()) {
    throw ShapeError("output weights have length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(m.rows()));
  }
  const DenseMatrix row(1, w.size(), std::vector<double>(w.begin(), w.end()));
  const DenseMatrix out(1, v.size(), std::vector<double>(v.begin(), v.end()));
  LayerGadget layer = build_blocks(row, m, out, eps / static_cast<double>(w.size()));

  NeuronGadget g;
  g.first_mask = std::move(layer.plan.first_mask);
  g.second_mask.assign(layer.plan.second_mask.entries().begin(),
                       layer.plan.second_mask.entries().end());
  g.report = std::move(layer.report);
  return g;
}

}  // namespace lottery
