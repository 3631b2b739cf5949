#include "bbinterp/bb_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bbinterp {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::singular_nodes: return "singular_nodes";
    case ErrorCode::node_out_of_range: return "node_out_of_range";
    case ErrorCode::singular_formula: return "singular_formula";
    case ErrorCode::geometry: return "geometry";
    case ErrorCode::partition: return "partition";
    case ErrorCode::condition_s: return "condition_s";
    case ErrorCode::singular_matrix: return "singular_matrix";
    case ErrorCode::numerical: return "numerical";
    case ErrorCode::undefined_metric: return "undefined_metric";
    case ErrorCode::resource: return "resource";
    case ErrorCode::parse: return "parse";
    case ErrorCode::validation: return "validation";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::parse:
    case ErrorCode::validation:
    case ErrorCode::partition:
    case ErrorCode::singular_nodes:
    case ErrorCode::node_out_of_range:
    case ErrorCode::index_out_of_range:
      return 2;
    case ErrorCode::resource:
      return 4;
    default:
      return 3;
  }
}

Triangle2::Triangle2(Point2 v1, Point2 v2, Point2 v3) : v_{v1, v2, v3} {
  const double diam = diameter();
  if (!(std::abs(signed_area()) >= 1e-14 * diam * diam) || diam == 0.0) {
    throw Error(ErrorCode::geometry, "degenerate triangle");
  }
}

double Triangle2::signed_area() const {
  const auto& [a, b, c] = v_;
  return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

double Triangle2::diameter() const {
  auto dist = [](Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); };
  return std::max({dist(v_[0], v_[1]), dist(v_[1], v_[2]), dist(v_[2], v_[0])});
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double multinomial(std::span<const int> alpha) {
  int n = 0;
  double r = 1.0;
  for (int a : alpha) {
    n += a;
    r *= binomial(n, a);
  }
  return r;
}

double bernstein_eval_1d(int n, int k, double x) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorCode::index_out_of_range,
                "Bernstein index " + std::to_string(k) + " outside 0.." + std::to_string(n));
  }
  return binomial(n, k) * std::pow(1.0 - x, n - k) * std::pow(x, k);
}

double de_casteljau_1d(std::span<const double> c, double x) {
  return de_casteljau<double>(c, x);
}

ControlVector1D degree_raise_1d(const ControlVector1D& c) {
  const int k = c.degree() + 1;
  ControlVector1D out;
  out.coeffs.resize(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) {
    const double left = j > 0 ? c.coeffs[static_cast<std::size_t>(j - 1)] : 0.0;
    const double right = j < k ? c.coeffs[static_cast<std::size_t>(j)] : 0.0;
    out.coeffs[static_cast<std::size_t>(j)] =
        (static_cast<double>(j) / k) * left + (static_cast<double>(k - j) / k) * right;
  }
  return out;
}

std::size_t simplex_basis_size(int d, int n) {
  return static_cast<std::size_t>(binomial(n + d, d));
}

namespace {

void enumerate_into(MultiIndex& current, std::size_t pos, int remaining,
                    std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current[pos] = v;
    enumerate_into(current, pos + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_multi_indices(int d, int n) {
  std::vector<MultiIndex> out;
  out.reserve(simplex_basis_size(d, n));
  MultiIndex current(static_cast<std::size_t>(d) + 1, 0);
  enumerate_into(current, 0, n, out);
  return out;
}

std::size_t multi_index_rank(std::span<const int> alpha) {
  const int d = static_cast<int>(alpha.size()) - 1;
  int remaining = std::accumulate(alpha.begin(), alpha.end(), 0);
  std::size_t rank = 0;
  for (int p = 0; p < d; ++p) {
    const int a = alpha[static_cast<std::size_t>(p)];
    const int tail_parts = d - p - 1;
    // indices that agree so far but carry a larger value at position p
    for (int v = a + 1; v <= remaining; ++v) {
      rank += static_cast<std::size_t>(binomial(remaining - v + tail_parts, tail_parts));
    }
    remaining -= a;
  }
  return rank;
}

std::array<double, 3> barycentric_coords(const Triangle2& t, Point2 p) {
  const Point2& a = t.vertex(0);
  const Point2& b = t.vertex(1);
  const Point2& c = t.vertex(2);
  const double det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  const double l2 = ((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / det;
  const double l3 = ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / det;
  return {1.0 - l2 - l3, l2, l3};
}

Point2 cartesian_point(const Triangle2& t, std::span<const double> lambda) {
  Point2 p;
  for (int k = 0; k < 3; ++k) {
    p.x += lambda[static_cast<std::size_t>(k)] * t.vertex(k).x;
    p.y += lambda[static_cast<std::size_t>(k)] * t.vertex(k).y;
  }
  return p;
}

double simplex_bernstein_eval(std::span<const int> alpha, std::span<const double> lambda) {
  double r = multinomial(alpha);
  for (std::size_t k = 0; k < alpha.size(); ++k) r *= std::pow(lambda[k], alpha[k]);
  return r;
}

double de_casteljau_simplex(const SimplexCoefficients& c, std::span<const double> lambda) {
  const int d = c.dimension;
  if (lambda.size() != static_cast<std::size_t>(d) + 1) {
    throw Error(ErrorCode::validation, "barycentric point dimension does not match coefficients");
  }
  std::vector<double> level(c.coeffs);
  MultiIndex shifted(static_cast<std::size_t>(d) + 1);
  for (int r = c.degree; r > 0; --r) {
    const auto lower = enumerate_multi_indices(d, r - 1);
    std::vector<double> next(lower.size(), 0.0);
    for (std::size_t i = 0; i < lower.size(); ++i) {
      double acc = 0.0;
      for (int k = 0; k <= d; ++k) {
        shifted = lower[i];
        ++shifted[static_cast<std::size_t>(k)];
        acc += lambda[static_cast<std::size_t>(k)] * level[multi_index_rank(shifted)];
      }
      next[i] = acc;
    }
    level = std::move(next);
  }
  return level.at(0);
}

SimplexCoefficients bb_product_affine(const SimplexCoefficients& c, std::span<const double> g) {
  const int d = c.dimension;
  if (g.size() != static_cast<std::size_t>(d) + 1) {
    throw Error(ErrorCode::validation, "affine factor dimension does not match coefficients");
  }
  const int j = c.degree;
  const auto indices = enumerate_multi_indices(d, j + 1);
  SimplexCoefficients out{d, j + 1, std::vector<double>(indices.size(), 0.0)};
  MultiIndex lowered(static_cast<std::size_t>(d) + 1);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    double acc = 0.0;
    for (int k = 0; k <= d; ++k) {
      const int ak = indices[i][static_cast<std::size_t>(k)];
      if (ak == 0) continue;
      lowered = indices[i];
      --lowered[static_cast<std::size_t>(k)];
      acc += c.coeffs[multi_index_rank(lowered)] * g[static_cast<std::size_t>(k)] *
             (static_cast<double>(ak) / (j + 1));
    }
    out.coeffs[i] = acc;
  }
  return out;
}

}  // namespace bbinterp
