#include "bbinterp/reference_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bbinterp {

DenseMatrix assemble_bv_matrix(const Nodes1D& nodes) {
  return assemble_bv_matrix_t<double>(nodes.values());
}

DenseMatrix assemble_tensor_bv_matrix(std::span<const Nodes1D> axes) {
  if (axes.empty()) throw Error(ErrorCode::validation, "no axes");
  DenseMatrix a = assemble_bv_matrix(axes[0]);
  for (std::size_t k = 1; k < axes.size(); ++k) a = kronecker(a, assemble_bv_matrix(axes[k]));
  return a;
}

DenseMatrix assemble_simplex_bv_matrix(int degree, const Triangle2& t, std::span<const Point2> nodes) {
  const auto indices = enumerate_multi_indices(2, degree);
  DenseMatrix a(indices.size(), nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto lambda = barycentric_coords(t, nodes[j]);
    for (std::size_t i = 0; i < indices.size(); ++i) a(i, j) = simplex_bernstein_eval(indices[i], lambda);
  }
  return a;
}

std::vector<double> lu_solve(const DenseMatrix& a, std::span<const double> f) {
  return lu_solve_t<double>(a, f);
}

SvdResult jacobi_svd(const DenseMatrix& a) {
  if (a.rows != a.cols) throw Error(ErrorCode::validation, "jacobi_svd expects a square matrix");
  const std::size_t n = a.rows;
  constexpr int kMaxSweeps = 80;
  constexpr double kTol = 1e-14;

  // Columns are rotated in place until mutually orthogonal; stored
  // column-major for contiguous access.
  std::vector<double> w(n * n), v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[j * n + i] = a(i, j);
  for (std::size_t j = 0; j < n; ++j) v[j * n + j] = 1.0;

  int sweep = 0;
  bool converged = n <= 1;
  while (!converged && sweep < kMaxSweeps) {
    ++sweep;
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double* wp = &w[p * n];
        double* wq = &w[q * n];
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          alpha += wp[i] * wp[i];
          beta += wq[i] * wq[i];
          gamma += wp[i] * wq[i];
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        const double cosine = std::abs(gamma) / std::sqrt(alpha * beta);
        off = std::max(off, cosine);
        if (cosine <= kTol) continue;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          const double x = wp[i], y = wq[i];
          wp[i] = c * x - s * y;
          wq[i] = s * x + c * y;
        }
        double* vp = &v[p * n];
        double* vq = &v[q * n];
        for (std::size_t i = 0; i < n; ++i) {
          const double x = vp[i], y = vq[i];
          vp[i] = c * x - s * y;
          vq[i] = s * x + c * y;
        }
      }
    }
    converged = off <= kTol;
  }
  if (!converged) throw Error(ErrorCode::numerical, "Jacobi SVD did not converge");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += w[j * n + i] * w[j * n + i];
    norms[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  SvdResult r{DenseMatrix(n, n), std::vector<double>(n), DenseMatrix(n, n), sweep};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    r.sigma[k] = norms[j];
    for (std::size_t i = 0; i < n; ++i) {
      r.u(i, k) = norms[j] > 0.0 ? w[j * n + i] / norms[j] : 0.0;
      r.v(i, k) = v[j * n + i];
    }
  }
  return r;
}

double condition_number(const DenseMatrix& a) {
  const auto svd = jacobi_svd(a);
  if (svd.sigma.empty()) return 1.0;
  const double smin = svd.sigma.back();
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return svd.sigma.front() / smin;
}

double relative_error(std::span<const double> exact, std::span<const double> approx) {
  if (exact.size() != approx.size()) throw Error(ErrorCode::validation, "length mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double d = exact[i] - approx[i];
    num += d * d;
    den += exact[i] * exact[i];
  }
  if (den == 0.0) throw Error(ErrorCode::undefined_metric, "relative error against a zero vector");
  return std::sqrt(num) / std::sqrt(den);
}

}  // namespace bbinterp
