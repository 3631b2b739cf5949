#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's solvers: bases are summed from the explicit formula and linear
// systems are solved by textbook Gauss-Jordan elimination over GMP rationals.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;

inline Q to_q(double v) {
  Q q(v);  // exact: every double is a dyadic rational
  return q;
}

inline std::vector<Q> to_q(const std::vector<double>& v) {
  std::vector<Q> out;
  for (double x : v) out.push_back(to_q(x));
  return out;
}

inline std::vector<double> to_d(const std::vector<Q>& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

inline double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Q binom_q(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Q(r);
}

inline Q pow_q(const Q& x, int e) {
  Q r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

/// binom(n,k) (1-x)^(n-k) x^k, straight from the definition.
inline double bernstein(int n, int k, double x) {
  return binom(n, k) * std::pow(1.0 - x, n - k) * std::pow(x, k);
}

inline Q bernstein_q(int n, int k, const Q& x) { return binom_q(n, k) * pow_q(1 - x, n - k) * pow_q(x, k); }

inline double poly_1d(const std::vector<double>& c, double x) {
  const int n = static_cast<int>(c.size()) - 1;
  double s = 0.0;
  for (int k = 0; k <= n; ++k) s += c[static_cast<std::size_t>(k)] * bernstein(n, k, x);
  return s;
}

/// Gauss-Jordan with first-nonzero pivoting. Rows of `a` are equations.
inline std::vector<Q> solve(std::vector<std::vector<Q>> a, std::vector<Q> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Q m = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= m * a[col][k];
      b[r] -= m * b[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

/// Control points interpolating f at the nodes: sum_k c_k B_k(x_j) = f_j.
inline std::vector<Q> interpolate_1d(const std::vector<Q>& x, const std::vector<Q>& f) {
  const int n = static_cast<int>(x.size()) - 1;
  std::vector<std::vector<Q>> a(x.size(), std::vector<Q>(x.size()));
  for (std::size_t j = 0; j < x.size(); ++j)
    for (int k = 0; k <= n; ++k) a[j][static_cast<std::size_t>(k)] = bernstein_q(n, k, x[j]);
  return solve(std::move(a), f);
}

/// Full tensor system, row-major with the first axis slowest.
inline std::vector<Q> interpolate_tensor(const std::vector<std::vector<Q>>& axes, const std::vector<Q>& f) {
  const std::size_t d = axes.size();
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  auto split = [&](std::size_t flat) {
    std::vector<std::size_t> idx(d);
    for (std::size_t k = d; k-- > 0;) {
      idx[k] = flat % axes[k].size();
      flat /= axes[k].size();
    }
    return idx;
  };
  std::vector<std::vector<Q>> m(total, std::vector<Q>(total));
  for (std::size_t row = 0; row < total; ++row) {
    const auto node = split(row);
    for (std::size_t col = 0; col < total; ++col) {
      const auto basis = split(col);
      Q v = 1;
      for (std::size_t k = 0; k < d; ++k) {
        const int n = static_cast<int>(axes[k].size()) - 1;
        v *= bernstein_q(n, static_cast<int>(basis[k]), axes[k][node[k]]);
      }
      m[row][col] = v;
    }
  }
  return solve(std::move(m), f);
}

/// Multi-indices of degree n over three barycentric coordinates, in the
/// library's documented order (lexicographically descending).
inline std::vector<std::array<int, 3>> indices_2d(int n) {
  std::vector<std::array<int, 3>> out;
  for (int a = n; a >= 0; --a)
    for (int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
  return out;
}

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline double simplex_basis(const std::array<int, 3>& a, const std::array<double, 3>& l) {
  const int n = a[0] + a[1] + a[2];
  return factorial(n) / (factorial(a[0]) * factorial(a[1]) * factorial(a[2])) * std::pow(l[0], a[0]) *
         std::pow(l[1], a[1]) * std::pow(l[2], a[2]);
}

inline double simplex_poly(const std::vector<double>& c, int n, const std::array<double, 3>& l) {
  const auto idx = indices_2d(n);
  double s = 0.0;
  for (std::size_t i = 0; i < idx.size(); ++i) s += c[i] * simplex_basis(idx[i], l);
  return s;
}

struct QPoint {
  Q x, y;
};

inline std::array<Q, 3> barycentric_q(const std::array<QPoint, 3>& t, const QPoint& p) {
  const Q det = (t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[2].x - t[0].x) * (t[1].y - t[0].y);
  const Q l2 = ((p.x - t[0].x) * (t[2].y - t[0].y) - (t[2].x - t[0].x) * (p.y - t[0].y)) / det;
  const Q l3 = ((t[1].x - t[0].x) * (p.y - t[0].y) - (p.x - t[0].x) * (t[1].y - t[0].y)) / det;
  return {1 - l2 - l3, l2, l3};
}

/// Simplex control points interpolating f at the nodes.
inline std::vector<Q> interpolate_simplex(int n, const std::array<QPoint, 3>& t, const std::vector<QPoint>& nodes,
                                          const std::vector<Q>& f) {
  const auto idx = indices_2d(n);
  std::vector<std::vector<Q>> a(nodes.size(), std::vector<Q>(idx.size()));
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    const auto l = barycentric_q(t, nodes[r]);
    for (std::size_t c = 0; c < idx.size(); ++c) {
      const auto& al = idx[c];
      mpz_class multi;
      mpz_fac_ui(multi.get_mpz_t(), static_cast<unsigned long>(n));
      mpz_class den = 1, tmp;
      for (int k = 0; k < 3; ++k) {
        mpz_fac_ui(tmp.get_mpz_t(), static_cast<unsigned long>(al[static_cast<std::size_t>(k)]));
        den *= tmp;
      }
      Q coef(multi, den);
      coef.canonicalize();
      a[r][c] = coef * pow_q(l[0], al[0]) * pow_q(l[1], al[1]) * pow_q(l[2], al[2]);
    }
  }
  return solve(std::move(a), f);
}

inline double rel_error(const std::vector<double>& exact, const std::vector<double>& approx) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    num += (exact[i] - approx[i]) * (exact[i] - approx[i]);
    den += exact[i] * exact[i];
  }
  return std::sqrt(num) / std::sqrt(den);
}

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace oracle
