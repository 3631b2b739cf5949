#include "bbinterp/simplex2d.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace bbinterp {

namespace {

constexpr double kCollinearTol = 1e-10;  // relative to triangle diameter
constexpr double kDivisorFloor = 1e-12;
constexpr double kSnapZero = 1e-14;
constexpr double kChordTol = 1e-10;

double affine_value(const AffineBB& g, const std::array<double, 3>& lambda) {
  return g[0] * lambda[0] + g[1] * lambda[1] + g[2] * lambda[2];
}

int wrap(int k) { return (k - 1) % 3 + 1; }  // 1-based, 4 -> 1, 5 -> 2

}  // namespace

std::vector<Point2> NodePartition::all_nodes() const {
  std::vector<Point2> out;
  for (const auto& g : groups) out.insert(out.end(), g.nodes.begin(), g.nodes.end());
  return out;
}

std::vector<double> NodePartition::all_data() const {
  std::vector<double> out;
  for (const auto& g : groups) out.insert(out.end(), g.data.begin(), g.data.end());
  return out;
}

void validate_partition(const NodePartition& p, const Triangle2& t) {
  if (p.groups.empty()) throw Error(ErrorCode::partition, "empty partition");
  const int n = p.degree();
  for (std::size_t g = 0; g < p.groups.size(); ++g) {
    const auto expected = static_cast<std::size_t>(n) - g + 1;
    if (p.groups[g].nodes.size() != expected) {
      throw Error(ErrorCode::partition, "group A_" + std::to_string(n - static_cast<int>(g)) +
                                            " must hold " + std::to_string(expected) + " nodes");
    }
    if (p.groups[g].data.size() != expected) {
      throw Error(ErrorCode::partition, "group data count does not match node count");
    }
    if (expected >= 2) (void)bb_affine(p.groups[g].nodes, t);
  }
  const auto nodes = p.all_nodes();
  const double scale = t.diameter();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t k = i + 1; k < nodes.size(); ++k) {
      if (std::hypot(nodes[i].x - nodes[k].x, nodes[i].y - nodes[k].y) < 1e-14 * scale) {
        throw Error(ErrorCode::partition, "duplicate interpolation nodes");
      }
    }
  }
}

AffineBB bb_affine(std::span<const Point2> group, const Triangle2& t) {
  if (group.size() < 2) throw Error(ErrorCode::partition, "a line needs at least two nodes");
  Point2 centre;
  for (const auto& p : group) {
    centre.x += p.x;
    centre.y += p.y;
  }
  centre.x /= static_cast<double>(group.size());
  centre.y /= static_cast<double>(group.size());

  double nx = 0.0, ny = 0.0;
  if (group.size() == 2) {
    const double dx = group[1].x - group[0].x;
    const double dy = group[1].y - group[0].y;
    const double len = std::hypot(dx, dy);
    if (len == 0.0) throw Error(ErrorCode::partition, "coincident nodes in a line group");
    nx = -dy / len;
    ny = dx / len;
  } else {
    // total least squares: the normal is the minor principal axis
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& p : group) {
      const double dx = p.x - centre.x, dy = p.y - centre.y;
      sxx += dx * dx;
      syy += dy * dy;
      sxy += dx * dy;
    }
    const double theta = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
    nx = -std::sin(theta);
    ny = std::cos(theta);
  }
  if (nx < 0.0 || (nx == 0.0 && ny < 0.0)) {
    nx = -nx;
    ny = -ny;
  }

  double residual = 0.0;
  for (const auto& p : group) residual = std::max(residual, std::abs(nx * (p.x - centre.x) + ny * (p.y - centre.y)));
  if (residual > kCollinearTol * t.diameter()) {
    throw Error(ErrorCode::partition, "line group is not collinear (residual " + std::to_string(residual) + ")");
  }

  AffineBB g{};
  double scale = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Point2& v = t.vertex(k);
    g[static_cast<std::size_t>(k)] = nx * (v.x - centre.x) + ny * (v.y - centre.y);
    scale = std::max(scale, std::abs(g[static_cast<std::size_t>(k)]));
  }
  for (auto& v : g) v /= scale;
  return g;
}

LineSegmentInTriangle gcap_t(const AffineBB& g_in, const Triangle2& t) {
  AffineBB g = g_in;
  double scale = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
  if (scale == 0.0) throw Error(ErrorCode::geometry, "affine function vanishes identically");
  for (auto& v : g) {
    v /= scale;
    if (std::abs(v) < kSnapZero) v = 0.0;
  }

  std::array<std::optional<Point2>, 3> hits;
  int solvable = 0;
  int kappa = 0;
  for (int k = 1; k <= 3; ++k) {
    // lambda_k = 0: the point lies on the edge between v_p and v_q
    const int p = wrap(k + 1), q = wrap(k + 2);
    const double gp = g[static_cast<std::size_t>(p - 1)], gq = g[static_cast<std::size_t>(q - 1)];
    if (gp == 0.0 && gq == 0.0) {
      throw Error(ErrorCode::geometry, "line coincides with a triangle edge");
    }
    if (gp * gq <= 0.0) {
      const double lp = gq / (gq - gp);
      const double lq = 1.0 - lp;
      const Point2& vp = t.vertex(p - 1);
      const Point2& vq = t.vertex(q - 1);
      hits[static_cast<std::size_t>(k - 1)] = Point2{lp * vp.x + lq * vq.x, lp * vp.y + lq * vq.y};
      ++solvable;
    } else {
      kappa = k;
    }
  }
  if (solvable != 2) {
    throw Error(ErrorCode::geometry, solvable == 3 ? "line passes through a triangle vertex"
                                                   : "line does not cross the triangle");
  }
  return {*hits[static_cast<std::size_t>(wrap(kappa + 1) - 1)],
          *hits[static_cast<std::size_t>(wrap(kappa + 2) - 1)], kappa};
}

LineSegmentInTriangle line_chord(const AffineBB& g_in, const Triangle2& t) {
  AffineBB g = g_in;
  const double scale = std::max({std::abs(g[0]), std::abs(g[1]), std::abs(g[2])});
  if (scale == 0.0) throw Error(ErrorCode::geometry, "affine function vanishes identically");
  int zeros = 0, zero_at = 0, nonzero_at = 0;
  for (int k = 0; k < 3; ++k) {
    auto& v = g[static_cast<std::size_t>(k)];
    v /= scale;
    if (std::abs(v) < kSnapZero) {
      v = 0.0;
      ++zeros;
      zero_at = k + 1;
    } else {
      nonzero_at = k + 1;
    }
  }
  if (zeros == 2) {
    // the line is the edge opposite vertex `nonzero_at`
    const int kappa = nonzero_at;
    return {t.vertex(wrap(kappa + 1) - 1), t.vertex(wrap(kappa + 2) - 1), kappa};
  }
  if (zeros == 1) {
    const int v = zero_at;
    const int p = wrap(v + 1), q = wrap(v + 2);
    const double gp = g[static_cast<std::size_t>(p - 1)], gq = g[static_cast<std::size_t>(q - 1)];
    if (gp * gq < 0.0) {
      // through vertex v and across the opposite edge
      const double lp = gq / (gq - gp);
      const Point2& vp = t.vertex(p - 1);
      const Point2& vq = t.vertex(q - 1);
      const Point2 hit{lp * vp.x + (1.0 - lp) * vq.x, lp * vp.y + (1.0 - lp) * vq.y};
      return {t.vertex(v - 1), hit, p};
    }
  }
  return gcap_t(g_in, t);
}

std::vector<double> transform_1d(std::span<const Point2> group, const LineSegmentInTriangle& seg) {
  const double ex = seg.z2.x - seg.z1.x, ey = seg.z2.y - seg.z1.y;
  const double len = std::hypot(ex, ey);
  if (len == 0.0) throw Error(ErrorCode::geometry, "degenerate chord");
  std::vector<double> out;
  out.reserve(group.size());
  for (const auto& p : group) {
    const double dx = p.x - seg.z1.x, dy = p.y - seg.z1.y;
    double s = std::hypot(dx, dy) / len;
    const double along = (dx * ex + dy * ey) / (len * len);
    if (along < -kChordTol || s > 1.0 + kChordTol) {
      throw Error(ErrorCode::partition, "node lies outside the triangle chord");
    }
    out.push_back(std::clamp(s, 0.0, 1.0));
  }
  return out;
}

SimplexCoefficients bb_extension(const ControlVector1D& cgamma, const LineSegmentInTriangle& seg,
                                 const Triangle2& t) {
  const int j = cgamma.degree();
  const auto l1 = barycentric_coords(t, seg.z1);
  const auto l2 = barycentric_coords(t, seg.z2);
  const int kappa = seg.kappa - 1;
  int a = (kappa + 1) % 3;
  int b = (kappa + 2) % 3;
  // a: the coordinate that is nonzero at z1 (and zero at z2)
  if (l1[static_cast<std::size_t>(b)] > l1[static_cast<std::size_t>(a)]) std::swap(a, b);
  const double la = l1[static_cast<std::size_t>(a)];
  const double lb = l2[static_cast<std::size_t>(b)];
  if (!(la > 0.0) || !(lb > 0.0)) {
    throw Error(ErrorCode::geometry, "chord end points do not separate the triangle vertices");
  }

  const auto indices = enumerate_multi_indices(2, j);
  SimplexCoefficients out{2, j, std::vector<double>(indices.size(), 0.0)};
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const auto& alpha = indices[i];
    if (alpha[static_cast<std::size_t>(kappa)] != 0) continue;
    const int aa = alpha[static_cast<std::size_t>(a)];
    const int ab = alpha[static_cast<std::size_t>(b)];
    out.coeffs[i] = cgamma.coeffs[static_cast<std::size_t>(ab)] * std::pow(la, -aa) * std::pow(lb, -ab);
  }
  return out;
}

SimplexCoefficients newton_bernstein_2d(const NodePartition& partition, const Triangle2& t,
                                        SimplexTrace* trace) {
  validate_partition(partition, t);
  const int n = partition.degree();
  const auto ngroups = partition.groups.size();

  std::vector<std::vector<double>> f(ngroups);
  std::vector<std::vector<std::array<double, 3>>> lambdas(ngroups);
  for (std::size_t g = 0; g < ngroups; ++g) {
    f[g] = partition.groups[g].data;
    for (const auto& p : partition.groups[g].nodes) lambdas[g].push_back(barycentric_coords(t, p));
  }

  SimplexCoefficients result{2, n, std::vector<double>(simplex_basis_size(2, n), 0.0)};
  std::vector<AffineBB> gammas;  // gammas[g] belongs to A_{n-g}
  gammas.reserve(ngroups);

  auto accumulate = [&](SimplexCoefficients a, std::size_t g) {
    // multiply by Gamma_i for every line fitted before this group
    for (std::size_t i = g; i-- > 0;) a = bb_product_affine(a, gammas[i]);
    for (std::size_t k = 0; k < result.coeffs.size(); ++k) result.coeffs[k] += a.coeffs[k];
  };

  for (std::size_t g = 0; g + 1 < ngroups; ++g) {
    const auto& nodes = partition.groups[g].nodes;
    const AffineBB gamma = bb_affine(nodes, t);
    const auto seg = line_chord(gamma, t);
    const Nodes1D line_nodes(transform_1d(nodes, seg));
    const auto cgamma = newton_bernstein(line_nodes, f[g]);
    const auto cq = bb_extension(cgamma, seg, t);

    accumulate(cq, g);
    gammas.push_back(gamma);

    for (std::size_t h = g + 1; h < ngroups; ++h) {
      for (std::size_t i = 0; i < f[h].size(); ++i) {
        const double denom = affine_value(gamma, lambdas[h][i]);
        if (std::abs(denom) < kDivisorFloor) {
          throw Error(ErrorCode::condition_s, "node of A_" + std::to_string(n - static_cast<int>(h)) +
                                                  " lies on the line of A_" +
                                                  std::to_string(n - static_cast<int>(g)));
        }
        f[h][i] = (f[h][i] - de_casteljau_simplex(cq, lambdas[h][i])) / denom;
      }
    }
    if (trace != nullptr) {
      trace->gammas.push_back(gamma);
      trace->segments.push_back(seg);
      trace->line_solutions.push_back(cgamma);
      trace->extensions.push_back(cq);
    }
  }

  // A_0: the remaining residual is the constant q_0
  const SimplexCoefficients q0{2, 0, {f[ngroups - 1][0]}};
  accumulate(q0, ngroups - 1);

  if (trace != nullptr) {
    trace->extensions.push_back(q0);
    SimplexCoefficients prod{2, 0, {1.0}};
    trace->products.assign(ngroups, prod);
    for (std::size_t g = 1; g < ngroups; ++g) {
      prod = bb_product_affine(prod, gammas[g - 1]);
      trace->products[g] = prod;
    }
  }
  return result;
}

NodePartition detect_partition(std::span<const Point2> nodes, std::span<const double> data, double tol) {
  if (nodes.size() != data.size()) throw Error(ErrorCode::validation, "node and data counts differ");
  const std::size_t count = nodes.size();
  int n = 0;
  while (static_cast<std::size_t>((n + 1) * (n + 2) / 2) < count) ++n;
  if (static_cast<std::size_t>((n + 1) * (n + 2) / 2) != count) {
    throw Error(ErrorCode::validation, "node count is not (n+1)(n+2)/2");
  }
  double scale = 0.0;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t k = i + 1; k < count; ++k)
      scale = std::max(scale, std::hypot(nodes[i].x - nodes[k].x, nodes[i].y - nodes[k].y));
  const double eps = tol * std::max(scale, 1.0);

  std::vector<bool> used(count, false);
  std::vector<std::vector<std::size_t>> chosen;
  long budget = 200000;

  std::function<bool(int)> search = [&](int j) -> bool {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < count; ++i)
      if (!used[i]) rest.push_back(i);
    if (j == 0) {
      if (rest.size() != 1) return false;
      chosen.push_back(rest);
      return true;
    }
    for (std::size_t a = 0; a < rest.size(); ++a) {
      for (std::size_t b = a + 1; b < rest.size(); ++b) {
        if (--budget < 0) return false;
        const Point2 p = nodes[rest[a]], q = nodes[rest[b]];
        const double dx = q.x - p.x, dy = q.y - p.y, len = std::hypot(dx, dy);
        if (len == 0.0) continue;
        std::vector<std::size_t> line;
        bool canonical = true;
        for (std::size_t c = 0; c < rest.size(); ++c) {
          const Point2 r = nodes[rest[c]];
          if (std::abs(dx * (r.y - p.y) - dy * (r.x - p.x)) / len <= eps) {
            if (c < b && c != a) canonical = false;  // same line is reached from a smaller pair
            line.push_back(rest[c]);
          }
        }
        if (!canonical || line.size() != static_cast<std::size_t>(j) + 1) continue;
        for (auto i : line) used[i] = true;
        chosen.push_back(line);
        if (search(j - 1)) return true;
        chosen.pop_back();
        for (auto i : line) used[i] = false;
      }
    }
    return false;
  };

  if (!search(n)) {
    throw Error(ErrorCode::partition, "no partition into collinear node groups was found");
  }
  NodePartition out;
  for (const auto& group : chosen) {
    NodeGroup g;
    for (auto i : group) {
      g.nodes.push_back(nodes[i]);
      g.data.push_back(data[i]);
    }
    out.groups.push_back(std::move(g));
  }
  return out;
}

double simplex_eval(const SimplexCoefficients& c, const Triangle2& t, Point2 p) {
  const auto lambda = barycentric_coords(t, p);
  return de_casteljau_simplex(c, lambda);
}

}  // namespace bbinterp
