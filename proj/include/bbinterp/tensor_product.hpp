#pragma once

// Tensor-product interpolation by axis sweeps of the univariate solver.
//
// Arrays are row-major with the x index slowest: entry (i, j) of an
// (n+1) x (m+1) array lives at i * (m+1) + j, and (i, j, k) at
// (i * (m+1) + j) * (l+1) + k. The same layout holds for data and
// coefficients.
//
// The sweeps over independent lines run under OpenMP. The namespace
// `serial` keeps a line-by-line reference implementation that the tests
// compare against.

#include <cstddef>
#include <span>
#include <vector>

#include "bbinterp/newton_bernstein.hpp"

namespace bbinterp {

struct TensorGrid2D {
  Nodes1D xnodes;
  Nodes1D ynodes;
  std::vector<double> data;
};

struct TensorGrid3D {
  Nodes1D xnodes;
  Nodes1D ynodes;
  Nodes1D znodes;
  std::vector<double> data;
};

struct TensorCoefficients {
  std::vector<int> degrees;  // one per axis
  std::vector<double> coeffs;
};

/// Univariate solver applied along each axis.
enum class LineSolver { newton_bernstein, lu };

TensorCoefficients tensor_product_2d(const TensorGrid2D& grid,
                                     LineSolver solver = LineSolver::newton_bernstein);
TensorCoefficients tensor_product_3d(const TensorGrid3D& grid,
                                     LineSolver solver = LineSolver::newton_bernstein);

/// Value of the tensor Bezier form at a point with one coordinate per axis.
double tensor_eval(const TensorCoefficients& c, std::span<const double> point);

namespace detail {

/// Interpolate along every axis in `axis_order` (a permutation of the axes).
/// `values` has shape (axes[0].size(), axes[1].size(), ...) and is
/// overwritten with the coefficients.
void tensor_sweep(std::span<const Nodes1D> axes, std::vector<double>& values,
                  std::span<const std::size_t> axis_order, LineSolver solver, bool parallel);

}  // namespace detail

namespace serial {

/// Line-by-line reference: one scalar univariate solve per grid line, no
/// threading. Produces the same values as the parallel path.
TensorCoefficients tensor_product_2d(const TensorGrid2D& grid);
TensorCoefficients tensor_product_3d(const TensorGrid3D& grid);

}  // namespace serial

}  // namespace bbinterp
