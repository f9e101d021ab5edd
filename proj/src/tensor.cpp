#include "lottery/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "lottery/distribution.hpp"
#include "lottery/errors.hpp"
#include "lottery/rng.hpp"

namespace lottery {
namespace {

std::string shape_str(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void normalize_in_place(Vector& v) {
  const double n = euclidean_norm(v);
  for (double& x : v) x /= n;
}

struct PowerResult {
  double estimate;
  bool converged;
};

PowerResult power_iterate(const DenseMatrix& m, Vector v, double tol, std::size_t max_iters) {
  normalize_in_place(v);
  double estimate = euclidean_norm(m.apply(v));
  for (std::size_t it = 0; it < max_iters; ++it) {
    Vector w = m.apply_transpose(m.apply(v));
    const double wn = euclidean_norm(w);
    if (wn == 0.0) return {estimate, true};
    for (double& x : w) x /= wn;
    v = std::move(w);
    const double next = euclidean_norm(m.apply(v));
    if (std::abs(next - estimate) <= tol * next) return {next, true};
    estimate = next;
  }
  return {estimate, false};
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ShapeError("matrix " + shape_str(rows, cols) + " given " +
                     std::to_string(data_.size()) + " entries");
  }
  if (!std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); })) {
    throw DomainError("matrix entries must be finite");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<double> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw ShapeError("ragged rows in matrix literal");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return DenseMatrix(r, c, std::move(entries));
}

Vector DenseMatrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw ShapeError("matrix " + shape_str(rows_, cols_) + " applied to vector of length " +
                     std::to_string(x.size()));
  }
  Vector y(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* a = data_.data() + r * cols_;
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) acc += a[c] * x[c];
    y[r] = acc;
  }
  return y;
}

Vector DenseMatrix::apply_transpose(std::span<const double> x) const {
  if (x.size() != rows_) {
    throw ShapeError("transpose of " + shape_str(rows_, cols_) +
                     " applied to vector of length " + std::to_string(x.size()));
  }
  Vector y(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    const double* a = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) y[c] += a[c] * x[r];
  }
  return y;
}

DenseMatrix DenseMatrix::scaled(double factor) const {
  DenseMatrix out = *this;
  for (double& x : out.data_) x *= factor;
  return out;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols, bool fill)
    : rows_(rows), cols_(cols), bits_(rows * cols, fill ? 1 : 0) {}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), bits_(std::move(bits)) {
  if (bits_.size() != rows * cols) {
    throw ShapeError("mask " + shape_str(rows, cols) + " given " + std::to_string(bits_.size()) +
                     " entries");
  }
  if (!std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b <= 1; })) {
    throw DomainError("mask entries must be 0 or 1");
  }
}

std::size_t BinaryMatrix::count() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

DenseMatrix BinaryMatrix::apply(const DenseMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) {
    throw ShapeError("mask " + shape_str(rows_, cols_) + " does not match weights " +
                     shape_str(m.rows(), m.cols()));
  }
  std::vector<double> out(m.entries().begin(), m.entries().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (bits_[i] == 0) out[i] = 0.0;
  }
  return DenseMatrix(rows_, cols_, std::move(out));
}

DenseNetwork::DenseNetwork(std::vector<DenseMatrix> layers) : layers_(std::move(layers)) {
  if (layers_.empty()) throw ShapeError("network needs at least one layer");
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i].rows() == 0 || layers_[i].cols() == 0) {
      throw ShapeError("layer " + std::to_string(i) + " has an empty dimension");
    }
    if (i > 0 && layers_[i].cols() != layers_[i - 1].rows()) {
      throw ShapeError("layer " + std::to_string(i) + " expects " +
                       std::to_string(layers_[i].cols()) + " inputs but layer " +
                       std::to_string(i - 1) + " produces " +
                       std::to_string(layers_[i - 1].rows()));
    }
  }
}

std::vector<std::size_t> DenseNetwork::widths() const {
  std::vector<std::size_t> w{input_dim()};
  for (const auto& l : layers_) w.push_back(l.rows());
  return w;
}

MaskSet all_ones_masks(const DenseNetwork& net) {
  MaskSet out;
  for (const auto& l : net.layers()) out.push_back(BinaryMatrix::ones(l.rows(), l.cols()));
  return out;
}

MaskSet all_zero_masks(const DenseNetwork& net) {
  MaskSet out;
  for (const auto& l : net.layers()) out.emplace_back(l.rows(), l.cols());
  return out;
}

void check_masks(const DenseNetwork& net, const MaskSet& masks) {
  if (masks.size() != net.depth()) {
    throw ShapeError("network has " + std::to_string(net.depth()) + " layers but " +
                     std::to_string(masks.size()) + " masks were given");
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const auto& l = net.layer(i);
    if (masks[i].rows() != l.rows() || masks[i].cols() != l.cols()) {
      throw ShapeError("mask " + std::to_string(i) + " is " +
                       shape_str(masks[i].rows(), masks[i].cols()) + ", layer is " +
                       shape_str(l.rows(), l.cols()));
    }
  }
}

DenseNetwork apply_masks(const DenseNetwork& net, const MaskSet& masks) {
  check_masks(net, masks);
  std::vector<DenseMatrix> layers;
  layers.reserve(net.depth());
  for (std::size_t i = 0; i < net.depth(); ++i) layers.push_back(masks[i].apply(net.layer(i)));
  return DenseNetwork(std::move(layers));
}

Vector forward(const DenseNetwork& net, std::span<const double> x) {
  Vector h(x.begin(), x.end());
  const std::size_t depth = net.depth();
  for (std::size_t i = 0; i < depth; ++i) {
    h = net.layer(i).apply(h);
    if (i + 1 < depth) {
      for (double& v : h) v = v >= 0.0 ? v : 0.0;
    }
  }
  return h;
}

Vector masked_forward(const DenseNetwork& net, const MaskSet& masks,
                      std::span<const double> x) {
  return forward(apply_masks(net, masks), x);
}

double euclidean_norm(std::span<const double> x) noexcept {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

double spectral_norm(const DenseMatrix& m, double tol, std::size_t max_iters) {
  if (!(tol > 0)) throw DomainError("spectral_norm tolerance must be positive");
  if (m.size() == 0) return 0.0;
  if (std::all_of(m.entries().begin(), m.entries().end(), [](double x) { return x == 0.0; })) {
    return 0.0;
  }

  Vector ones(m.cols(), 1.0);
  Vector scrambled(m.cols());
  Rng rng(derive_seed(0, "spectral_norm.start"));
  std::normal_distribution<double> gauss;
  for (double& x : scrambled) x = gauss(rng);

  const PowerResult a = power_iterate(m, std::move(ones), tol, max_iters);
  const PowerResult b = power_iterate(m, std::move(scrambled), tol, max_iters);
  const double best = std::max(a.estimate, b.estimate);
  const bool converged = (a.estimate >= b.estimate) ? a.converged : b.converged;
  if (!converged) {
    throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iters) +
                               " iterations",
                           best);
  }
  return best;
}

NormalizedNetwork normalize_network(const DenseNetwork& net) {
  std::vector<DenseMatrix> layers;
  std::vector<double> scales;
  for (const auto& l : net.layers()) {
    double norm = 0.0;
    try {
      norm = spectral_norm(l, kSpectralTol, 20 * kSpectralMaxIters);
    } catch (const ConvergenceError& e) {
      norm = e.last_estimate();
    }
    const double scale = std::max(1.0, norm);
    scales.push_back(scale);
    layers.push_back(scale == 1.0 ? l : l.scaled(1.0 / scale));
  }
  return {DenseNetwork(std::move(layers)), std::move(scales)};
}

DenseNetwork random_network(std::span<const std::size_t> widths, const Distribution& dist,
                            std::uint64_t seed) {
  if (widths.size() < 2) throw ShapeError("random_network needs at least two widths");
  Rng rng = make_rng(seed, "random_network");
  std::vector<DenseMatrix> layers;
  for (std::size_t i = 1; i < widths.size(); ++i) {
    std::vector<double> entries(widths[i] * widths[i - 1]);
    for (double& x : entries) x = dist.sample(rng);
    layers.emplace_back(widths[i], widths[i - 1], std::move(entries));
  }
  return DenseNetwork(std::move(layers));
}

std::vector<Vector> sample_unit_sphere(std::size_t dim, std::uint64_t seed, std::size_t n) {
  if (dim == 0) throw DomainError("sphere dimension must be at least 1");
  Rng rng = make_rng(seed, "unit_sphere");
  std::normal_distribution<double> gauss;
  std::vector<Vector> out;
  out.reserve(n);
  while (out.size() < n) {
    Vector v(dim);
    for (double& x : v) x = gauss(rng);
    const double norm = euclidean_norm(v);
    if (norm == 0.0) continue;
    for (double& x : v) x /= norm;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace lottery
