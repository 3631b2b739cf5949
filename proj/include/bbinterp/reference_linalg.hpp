#pragma once

// Dense reference machinery: Bernstein-Vandermonde assembly, an LU baseline,
// one-sided Jacobi SVD and the relative-error metric.
//
// Matrix orientation: entry (i, j) = B_i^n(x_j), so basis functions index
// rows and nodes index columns. The interpolation system is A^T c = f.

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bbinterp/bb_core.hpp"
#include "bbinterp/newton_bernstein.hpp"

namespace bbinterp {

template <class T>
struct BasicMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> entries;  // row-major

  BasicMatrix() = default;
  BasicMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, T(0)) {}

  T& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
};

using DenseMatrix = BasicMatrix<double>;

template <class T>
BasicMatrix<T> transpose(const BasicMatrix<T>& a) {
  BasicMatrix<T> t(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
BasicMatrix<T> kronecker(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
  BasicMatrix<T> k(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j)
      for (std::size_t p = 0; p < b.rows; ++p)
        for (std::size_t q = 0; q < b.cols; ++q) k(i * b.rows + p, j * b.cols + q) = a(i, j) * b(p, q);
  return k;
}

template <class T>
std::vector<T> matvec(const BasicMatrix<T>& a, std::span<const T> x) {
  std::vector<T> y(a.rows, T(0));
  for (std::size_t i = 0; i < a.rows; ++i) {
    T acc = T(0);
    for (std::size_t j = 0; j < a.cols; ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

/// (n+1) x (n+1) matrix with entry (i, j) = B_i^n(x_j).
template <class T>
BasicMatrix<T> assemble_bv_matrix_t(std::span<const T> nodes) {
  const std::size_t count = nodes.size();
  const int n = static_cast<int>(count) - 1;
  BasicMatrix<T> a(count, count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) a(i, j) = bernstein_basis<T>(n, static_cast<int>(i), nodes[j]);
  return a;
}

DenseMatrix assemble_bv_matrix(const Nodes1D& nodes);

/// Full tensor Bernstein-Vandermonde matrix A_x (x) A_y [(x) A_z], same
/// orientation as the univariate one. Unknowns and equations both follow the
/// row-major, x-slowest layout.
DenseMatrix assemble_tensor_bv_matrix(std::span<const Nodes1D> axes);

/// Simplex Bernstein-Vandermonde matrix: entry (alpha, i) = B_alpha^n at
/// node i, alpha in canonical order.
DenseMatrix assemble_simplex_bv_matrix(int degree, const Triangle2& t, std::span<const Point2> nodes);

/// LU factorisation with partial pivoting.
template <class T>
class LuFactorization {
 public:
  explicit LuFactorization(BasicMatrix<T> a) : lu_(std::move(a)), perm_(lu_.rows) {
    using std::abs;
    if (lu_.rows != lu_.cols) throw Error(ErrorCode::validation, "LU requires a square matrix");
    const std::size_t n = lu_.rows;
    for (std::size_t i = 0; i < n; ++i) perm_[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      T best = abs(lu_(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        T v = abs(lu_(i, k));
        if (v > best) {
          best = v;
          piv = i;
        }
      }
      if (best == T(0)) throw Error(ErrorCode::singular_matrix, "zero pivot in LU factorisation");
      if (piv != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
        std::swap(perm_[k], perm_[piv]);
      }
      const T pivot = lu_(k, k);
#pragma omp parallel for schedule(static) if (n - k > 256)
      for (std::ptrdiff_t ii = static_cast<std::ptrdiff_t>(k + 1); ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        const T m = lu_(i, k) / pivot;
        lu_(i, k) = m;
        if (m == T(0)) continue;
        for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= m * lu_(k, j);
      }
    }
  }

  [[nodiscard]] std::vector<T> solve(std::span<const T> b) const {
    const std::size_t n = lu_.rows;
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) {
      T acc = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
      x[i] = acc;
    }
    for (std::size_t i = n; i-- > 0;) {
      T acc = x[i];
      for (std::size_t j = i + 1; j < n; ++j) acc -= lu_(i, j) * x[j];
      x[i] = acc / lu_(i, i);
    }
    return x;
  }

 private:
  BasicMatrix<T> lu_;
  std::vector<std::size_t> perm_;
};

template <class T>
std::vector<T> lu_solve_t(BasicMatrix<T> a, std::span<const T> f) {
  if (f.size() != a.rows) throw Error(ErrorCode::validation, "right-hand side length mismatch");
  return LuFactorization<T>(std::move(a)).solve(f);
}

std::vector<double> lu_solve(const DenseMatrix& a, std::span<const double> f);

struct SvdResult {
  DenseMatrix u;              // left singular vectors as columns
  std::vector<double> sigma;  // descending, nonnegative
  DenseMatrix v;              // right singular vectors as columns
  int sweeps = 0;
};

/// One-sided (Hestenes) Jacobi SVD of a square matrix.
SvdResult jacobi_svd(const DenseMatrix& a);

/// sigma_max / sigma_min in the 2-norm; +infinity for a singular matrix.
double condition_number(const DenseMatrix& a);

/// ||exact - approx||_2 / ||exact||_2.
double relative_error(std::span<const double> exact, std::span<const double> approx);

}  // namespace bbinterp
