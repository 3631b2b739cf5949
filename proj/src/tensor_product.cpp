#include "bbinterp/tensor_product.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "bbinterp/reference_linalg.hpp"

namespace bbinterp {

namespace {

// Lines handed to one task in the parallel newton_bernstein sweep.
constexpr std::size_t kChunk = 64;

std::vector<std::size_t> shape_of(std::span<const Nodes1D> axes) {
  std::vector<std::size_t> dims;
  for (const auto& a : axes) dims.push_back(a.size());
  return dims;
}

std::size_t product(std::span<const std::size_t> dims, std::size_t first, std::size_t last) {
  std::size_t p = 1;
  for (std::size_t k = first; k < last; ++k) p *= dims[k];
  return p;
}

void check_grid(std::span<const Nodes1D> axes, std::size_t data_size) {
  const auto dims = shape_of(axes);
  if (product(dims, 0, dims.size()) != data_size) {
    throw Error(ErrorCode::validation, "tensor data shape does not match node counts");
  }
}

std::vector<int> degrees_of(std::span<const Nodes1D> axes) {
  std::vector<int> d;
  for (const auto& a : axes) d.push_back(a.degree());
  return d;
}

void sweep_axis_nb(const Nodes1D& nodes, std::vector<double>& values, std::size_t outer,
                   std::size_t inner, bool parallel) {
  const std::size_t len = nodes.size();
  const std::size_t chunks = (inner + kChunk - 1) / kChunk;
  const auto tasks = static_cast<std::ptrdiff_t>(outer * chunks);
  double* base = values.data();
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t t = 0; t < tasks; ++t) {
    const auto o = static_cast<std::size_t>(t) / chunks;
    const std::size_t r0 = (static_cast<std::size_t>(t) % chunks) * kChunk;
    const std::size_t width = std::min(kChunk, inner - r0);
    double* block = base + o * len * inner + r0;
    newton_bernstein_block(nodes.values(), block, block, inner, width);
  }
}

void sweep_axis_lu(const Nodes1D& nodes, std::vector<double>& values, std::size_t outer,
                   std::size_t inner, bool parallel) {
  const std::size_t len = nodes.size();
  const LuFactorization<double> lu(transpose(assemble_bv_matrix(nodes)));
  const auto lines = static_cast<std::ptrdiff_t>(outer * inner);
  double* base = values.data();
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t t = 0; t < lines; ++t) {
    const auto o = static_cast<std::size_t>(t) / inner;
    const auto r = static_cast<std::size_t>(t) % inner;
    double* line = base + o * len * inner + r;
    std::vector<double> f(len);
    for (std::size_t i = 0; i < len; ++i) f[i] = line[i * inner];
    const auto c = lu.solve(f);
    for (std::size_t i = 0; i < len; ++i) line[i * inner] = c[i];
  }
}

}  // namespace

namespace detail {

void tensor_sweep(std::span<const Nodes1D> axes, std::vector<double>& values,
                  std::span<const std::size_t> axis_order, LineSolver solver, bool parallel) {
  check_grid(axes, values.size());
  const auto dims = shape_of(axes);
  for (std::size_t axis : axis_order) {
    const std::size_t outer = product(dims, 0, axis);
    const std::size_t inner = product(dims, axis + 1, dims.size());
    if (solver == LineSolver::newton_bernstein) {
      sweep_axis_nb(axes[axis], values, outer, inner, parallel);
    } else {
      sweep_axis_lu(axes[axis], values, outer, inner, parallel);
    }
  }
}

}  // namespace detail

TensorCoefficients tensor_product_2d(const TensorGrid2D& grid, LineSolver solver) {
  const std::array<Nodes1D, 2> axes{grid.xnodes, grid.ynodes};
  const std::array<std::size_t, 2> order{0, 1};
  TensorCoefficients out{degrees_of(axes), grid.data};
  detail::tensor_sweep(axes, out.coeffs, order, solver, true);
  return out;
}

TensorCoefficients tensor_product_3d(const TensorGrid3D& grid, LineSolver solver) {
  const std::array<Nodes1D, 3> axes{grid.xnodes, grid.ynodes, grid.znodes};
  const std::array<std::size_t, 3> order{0, 1, 2};
  TensorCoefficients out{degrees_of(axes), grid.data};
  detail::tensor_sweep(axes, out.coeffs, order, solver, true);
  return out;
}

double tensor_eval(const TensorCoefficients& c, std::span<const double> point) {
  if (point.size() != c.degrees.size()) {
    throw Error(ErrorCode::validation, "point dimension does not match tensor coefficients");
  }
  std::vector<double> values = c.coeffs;
  for (std::size_t axis = c.degrees.size(); axis-- > 0;) {
    const auto len = static_cast<std::size_t>(c.degrees[axis]) + 1;
    const std::size_t lines = values.size() / len;
    std::vector<double> reduced(lines);
    for (std::size_t l = 0; l < lines; ++l) {
      reduced[l] = de_casteljau_1d(std::span<const double>(values.data() + l * len, len), point[axis]);
    }
    values = std::move(reduced);
  }
  return values.at(0);
}

namespace serial {

namespace {

void sweep_lines(const Nodes1D& nodes, std::vector<double>& values, std::size_t outer,
                 std::size_t inner) {
  const std::size_t len = nodes.size();
  std::vector<double> line(len);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t r = 0; r < inner; ++r) {
      double* base = values.data() + o * len * inner + r;
      for (std::size_t i = 0; i < len; ++i) line[i] = base[i * inner];
      const auto c = newton_bernstein(nodes, line);
      for (std::size_t i = 0; i < len; ++i) base[i * inner] = c.coeffs[i];
    }
  }
}

}  // namespace

TensorCoefficients tensor_product_2d(const TensorGrid2D& grid) {
  const std::size_t nx = grid.xnodes.size(), ny = grid.ynodes.size();
  if (grid.data.size() != nx * ny) throw Error(ErrorCode::validation, "tensor data shape does not match node counts");
  TensorCoefficients out{{grid.xnodes.degree(), grid.ynodes.degree()}, grid.data};
  sweep_lines(grid.xnodes, out.coeffs, 1, ny);   // for each y_j: solve in x
  sweep_lines(grid.ynodes, out.coeffs, nx, 1);   // for each k: solve in y
  return out;
}

TensorCoefficients tensor_product_3d(const TensorGrid3D& grid) {
  const std::size_t nx = grid.xnodes.size(), ny = grid.ynodes.size(), nz = grid.znodes.size();
  if (grid.data.size() != nx * ny * nz) {
    throw Error(ErrorCode::validation, "tensor data shape does not match node counts");
  }
  TensorCoefficients out{{grid.xnodes.degree(), grid.ynodes.degree(), grid.znodes.degree()}, grid.data};
  sweep_lines(grid.xnodes, out.coeffs, 1, ny * nz);
  sweep_lines(grid.ynodes, out.coeffs, nx, nz);
  sweep_lines(grid.znodes, out.coeffs, nx * ny, 1);
  return out;
}

}  // namespace serial

}  // namespace bbinterp
