#pragma once

// Bernstein basis primitives on [0,1] and on simplices.
//
// Multi-indices over I_d^n are stored in a fixed canonical order:
// lexicographically descending on (alpha_1, alpha_2, ...). For d = 2, n = 2:
//   (2,0,0) (1,1,0) (1,0,1) (0,2,0) (0,1,1) (0,0,2)
// This ordering is part of the file format.

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bbinterp/errors.hpp"

namespace bbinterp {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Bezier coefficients c_0..c_n of a univariate polynomial on [0,1].
struct ControlVector1D {
  std::vector<double> coeffs;

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

using MultiIndex = std::vector<int>;

/// Bezier coefficients over I_d^n in canonical order.
struct SimplexCoefficients {
  int dimension = 2;
  int degree = 0;
  std::vector<double> coeffs;
};

/// Non-degenerate triangle in the plane. Construction rejects
/// |signed area| < 1e-14 * diameter^2.
class Triangle2 {
 public:
  Triangle2(Point2 v1, Point2 v2, Point2 v3);

  /// Unit triangle (0,0), (1,0), (0,1).
  static Triangle2 unit() { return {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}; }

  [[nodiscard]] const Point2& vertex(int k) const { return v_[static_cast<std::size_t>(k)]; }
  [[nodiscard]] const std::array<Point2, 3>& vertices() const { return v_; }
  [[nodiscard]] double signed_area() const;
  [[nodiscard]] double diameter() const;

 private:
  std::array<Point2, 3> v_;
};

/// Degree-1 Bezier form of an affine function on a triangle; entries are the
/// function values at v1, v2, v3.
using AffineBB = std::array<double, 3>;

/// binom(n, k) in double precision, exact for the degrees used here.
double binomial(int n, int k);

/// Multinomial n! / prod(alpha_j!).
double multinomial(std::span<const int> alpha);

double bernstein_eval_1d(int n, int k, double x);

/// Stable evaluation by repeated convex combination.
double de_casteljau_1d(std::span<const double> c, double x);
inline double de_casteljau_1d(const ControlVector1D& c, double x) {
  return de_casteljau_1d(std::span<const double>(c.coeffs), x);
}

ControlVector1D degree_raise_1d(const ControlVector1D& c);

std::vector<MultiIndex> enumerate_multi_indices(int d, int n);

/// Position of alpha within enumerate_multi_indices(alpha.size() - 1, |alpha|).
std::size_t multi_index_rank(std::span<const int> alpha);

/// binom(n + d, d).
std::size_t simplex_basis_size(int d, int n);

std::array<double, 3> barycentric_coords(const Triangle2& t, Point2 p);

/// Inverse of barycentric_coords.
Point2 cartesian_point(const Triangle2& t, std::span<const double> lambda);

/// B_alpha^n(lambda) = binom(n, alpha) * lambda^alpha.
double simplex_bernstein_eval(std::span<const int> alpha, std::span<const double> lambda);

double de_casteljau_simplex(const SimplexCoefficients& c, std::span<const double> lambda);

/// Bezier form of q * Gamma where q has degree j and Gamma is affine with
/// vertex values g (size d + 1). Result has degree j + 1.
SimplexCoefficients bb_product_affine(const SimplexCoefficients& c, std::span<const double> g);
inline SimplexCoefficients bb_product_affine(const SimplexCoefficients& c, const AffineBB& g) {
  return bb_product_affine(c, std::span<const double>(g));
}

// Scalar-generic variants, shared with the extended-precision and rational
// oracles.

template <class T>
T bernstein_basis(int n, int k, const T& x) {
  T result = T(1);
  const T one_minus = T(1) - x;
  // binom(n,k) built incrementally so T may be a rational type
  T coef = T(1);
  for (int i = 1; i <= k; ++i) {
    coef *= T(n - k + i);
    coef /= T(i);
  }
  for (int i = 0; i < n - k; ++i) result *= one_minus;
  for (int i = 0; i < k; ++i) result *= x;
  return coef * result;
}

template <class T>
T de_casteljau(std::span<const T> c, const T& x) {
  if (c.empty()) return T(0);
  std::vector<T> b(c.begin(), c.end());
  const T one_minus = T(1) - x;
  for (std::size_t level = b.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      T next = one_minus * b[i] + x * b[i + 1];
      b[i] = std::move(next);
    }
  }
  return b[0];
}

}  // namespace bbinterp
