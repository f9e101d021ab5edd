#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lottery {

class Distribution;

using Vector = std::vector<double>;

/// Row-major dense matrix of finite doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Zero-filled rows x cols matrix.
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Takes ownership of row-major entries; throws ShapeError on a size
  /// mismatch and DomainError on non-finite entries.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> entries() const noexcept { return data_; }

  /// y = A x
  Vector apply(std::span<const double> x) const;
  /// y = A^T x
  Vector apply_transpose(std::span<const double> x) const;

  DenseMatrix scaled(double factor) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Row-major matrix of {0,1} entries used as a pruning mask.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols, bool fill = false);
  /// Throws DomainError if any entry is not 0 or 1.
  BinaryMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);

  static BinaryMatrix ones(std::size_t rows, std::size_t cols) {
    return BinaryMatrix(rows, cols, true);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t count() const noexcept;

  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool on) { bits_[r * cols_ + c] = on ? 1 : 0; }

  std::span<const std::uint8_t> entries() const noexcept { return bits_; }

  /// Elementwise product mask ⊙ m.
  DenseMatrix apply(const DenseMatrix& m) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Bias-free ReLU network x -> L_l σ(L_{l-1} ... σ(L_1 x)).
class DenseNetwork {
 public:
  DenseNetwork() = default;
  /// Throws ShapeError if the list is empty or consecutive shapes disagree.
  explicit DenseNetwork(std::vector<DenseMatrix> layers);

  std::size_t depth() const noexcept { return layers_.size(); }
  std::size_t input_dim() const { return layers_.front().cols(); }
  std::size_t output_dim() const { return layers_.back().rows(); }
  /// [d_0, d_1, ..., d_l]
  std::vector<std::size_t> widths() const;

  const DenseMatrix& layer(std::size_t i) const { return layers_.at(i); }
  const std::vector<DenseMatrix>& layers() const noexcept { return layers_; }

  friend bool operator==(const DenseNetwork&, const DenseNetwork&) = default;

 private:
  std::vector<DenseMatrix> layers_;
};

using MaskSet = std::vector<BinaryMatrix>;

MaskSet all_ones_masks(const DenseNetwork& net);
MaskSet all_zero_masks(const DenseNetwork& net);

/// Throws ShapeError unless masks has one entry per layer with matching shape.
void check_masks(const DenseNetwork& net, const MaskSet& masks);

/// The network whose weights are masks[i] ⊙ layer(i).
DenseNetwork apply_masks(const DenseNetwork& net, const MaskSet& masks);

/// ReLU after every layer except the last.
Vector forward(const DenseNetwork& net, std::span<const double> x);

/// forward() on apply_masks(net, masks); bit-identical to it.
Vector masked_forward(const DenseNetwork& net, const MaskSet& masks,
                      std::span<const double> x);

double euclidean_norm(std::span<const double> x) noexcept;

inline constexpr double kSpectralTol = 1e-9;
inline constexpr std::size_t kSpectralMaxIters = 1000;

/// Largest singular value by power iteration on AᵀA.
///
/// Iterates from the normalized all-ones vector and from a fixed
/// pseudo-random vector and returns the larger of the two estimates, so a
/// start that is orthogonal to the top singular vector cannot hide it.
/// Stops when successive estimates agree to `tol` relative; throws
/// ConvergenceError (carrying the last estimate) after `max_iters`.
double spectral_norm(const DenseMatrix& m, double tol = kSpectralTol,
                     std::size_t max_iters = kSpectralMaxIters);

struct NormalizedNetwork {
  DenseNetwork network;
  /// Per-layer divisor max(1, ‖W_i‖); the product rescales outputs.
  std::vector<double> scales;
};

/// Divides every layer by max(1, spectral norm) so each ‖W_i‖ ≤ 1.
NormalizedNetwork normalize_network(const DenseNetwork& net);

/// Weights drawn i.i.d. from `dist`, layer by layer in row-major order.
DenseNetwork random_network(std::span<const std::size_t> widths, const Distribution& dist,
                            std::uint64_t seed);

/// n points on the unit sphere in R^dim (normalized Gaussian directions).
/// The first k samples for a given seed do not depend on n.
std::vector<Vector> sample_unit_sphere(std::size_t dim, std::uint64_t seed, std::size_t n);

}  // namespace lottery
