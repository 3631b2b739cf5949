#pragma once

// Univariate Lagrange interpolation in Bernstein-Bezier form.
//
// newton_bernstein() builds the Newton form of the interpolant one node at a
// time and carries the Bezier coefficients of both the nodal polynomial
// w_k(x) = prod_{i<k} (x - x_i) and the partial interpolant p_k along, degree
// raising p_{k-1} at every step. Cost is O(n^2) per data component.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bbinterp/bb_core.hpp"

namespace bbinterp {

/// Pairwise distinct nodes in [0,1]. Nodes closer than 1e-14 are rejected as
/// duplicates; nodes outside [0,1] are rejected rather than rescaled.
class Nodes1D {
 public:
  Nodes1D() = default;
  explicit Nodes1D(std::vector<double> values);

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] int degree() const { return static_cast<int>(values_.size()) - 1; }
  [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::span<const double> values() const { return values_; }

  /// Same nodes in the order given by perm.
  [[nodiscard]] Nodes1D permuted(std::span<const std::size_t> perm) const;

 private:
  std::vector<double> values_;
};

/// n+1 entries, each a vector of fixed width, stored row-major
/// (entry i occupies [i*width, (i+1)*width)). Scalars are width 1.
class VectorData {
 public:
  VectorData() = default;
  VectorData(std::size_t rows, std::size_t width) : rows_(rows), width_(width), values_(rows * width) {}
  VectorData(std::size_t rows, std::size_t width, std::vector<double> values);

  static VectorData scalars(std::span<const double> v) {
    return VectorData(v.size(), 1, std::vector<double>(v.begin(), v.end()));
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::span<double> row(std::size_t i) { return {values_.data() + i * width_, width_}; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * width_, width_};
  }
  [[nodiscard]] double& operator()(std::size_t i, std::size_t r) { return values_[i * width_ + r]; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t r) const { return values_[i * width_ + r]; }
  [[nodiscard]] std::span<const double> flat() const { return values_; }
  [[nodiscard]] std::vector<double>& storage() { return values_; }

 private:
  std::size_t rows_ = 0;
  std::size_t width_ = 0;
  std::vector<double> values_;
};

/// Floating-point operation tally for complexity checks. Owned by the caller.
struct OpCounter {
  std::uint64_t flops = 0;
};

/// f[x_0], f[x_0,x_1], ..., f[x_0..x_n] in the given node order.
VectorData divided_differences(const Nodes1D& nodes, const VectorData& data);

/// Bezier control points of the interpolant of (nodes, data).
VectorData newton_bernstein(const Nodes1D& nodes, const VectorData& data,
                            OpCounter* counter = nullptr);

ControlVector1D newton_bernstein(const Nodes1D& nodes, std::span<const double> data,
                                 OpCounter* counter = nullptr);

/// Low-level kernel over a strided block: entry i, component r of the input
/// lives at in[i * stride + r] for r < width, and the output uses the same
/// layout. Nodes are not validated. Used by the tensor sweeps.
void newton_bernstein_block(std::span<const double> x, const double* in, double* out,
                            std::size_t stride, std::size_t width, OpCounter* counter = nullptr);

/// Greedy Leja permutation: first the node of largest |x|, then repeatedly
/// the node maximising the product of distances to those already chosen.
/// Ties go to the smallest original index.
std::vector<std::size_t> leja_order(const Nodes1D& nodes);

/// Permutation sorting the nodes ascending.
std::vector<std::size_t> ascending_order(const Nodes1D& nodes);

/// Bezier coefficients (degree n+1) of l(x) = prod_k (x - x_k).
ControlVector1D node_factor_bb(std::span<const double> nodes);

/// mu_j = 1 / prod_{k != j} (x_j - x_k).
std::vector<double> barycentric_weights(const Nodes1D& nodes);

/// O(n^3) closed form c_k = sum_j mu_j f_j w~_k(x_j), built on the control
/// points of l(x)/(x - x_j). Requires every node strictly inside (0,1).
ControlVector1D closed_form_control_points(const Nodes1D& nodes, std::span<const double> data);

}  // namespace bbinterp
