#pragma once

// Random problem generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "bbinterp/simplex2d.hpp"

namespace fixtures {

using bbinterp::NodeGroup;
using bbinterp::NodePartition;
using bbinterp::Point2;
using bbinterp::Triangle2;

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Distinct sorted values in [lo, hi] with pairwise gaps of at least `gap`:
/// one jittered point per equal-width cell.
inline std::vector<double> spread(std::mt19937& rng, int count, double lo, double hi, double gap) {
  const double width = (hi - lo) / count;
  if (width <= gap) throw std::runtime_error("spread: gap too large");
  std::vector<double> v;
  for (int i = 0; i < count; ++i) v.push_back(lo + width * i + 0.5 * gap + uniform(rng, 0.0, width - gap));
  return v;
}

/// k/den for k = 1..count, optionally shuffled: rational, interior, distinct.
inline std::vector<double> rational_nodes(std::mt19937& rng, int count, bool shuffle) {
  const int den = count + uniform_int(rng, 1, 7);
  std::vector<int> ks;
  for (int k = 1; k < den; ++k) ks.push_back(k);
  std::shuffle(ks.begin(), ks.end(), rng);
  ks.resize(static_cast<std::size_t>(count));
  if (!shuffle) std::sort(ks.begin(), ks.end());
  std::vector<double> x;
  for (int k : ks) x.push_back(double(k) / double(den));
  return x;
}

inline std::vector<double> random_data(std::mt19937& rng, std::size_t count, double lo = -5.0, double hi = 5.0) {
  std::vector<double> v(count);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

struct Line {
  Point2 z1, z2;

  // |Gamma| normalised to max 1 over the triangle vertices
  double gamma(const Triangle2& t, Point2 p) const {
    const double nx = -(z2.y - z1.y), ny = z2.x - z1.x;
    double scale = 0.0;
    for (const auto& v : t.vertices()) scale = std::max(scale, std::abs(nx * (v.x - z1.x) + ny * (v.y - z1.y)));
    return std::abs(nx * (p.x - z1.x) + ny * (p.y - z1.y)) / scale;
  }
};

/// A partition satisfying the solvability layout with every later node at
/// |Gamma| >= `separation` from each earlier line. Chord end points sit at
/// edge parameters in [margin, 1 - margin].
inline NodePartition random_partition(std::mt19937& rng, int n, const Triangle2& t, double separation = 0.05,
                                      double margin = 0.2) {
  for (int restart = 0; restart < 200; ++restart) {
    NodePartition part;
    std::vector<Line> lines;
    bool failed = false;
    for (int j = n; j >= 0 && !failed; --j) {
      bool placed = false;
      for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
        std::vector<Point2> pts;
        Line line{};
        if (j == 0) {
          const double a = uniform(rng, 0.05, 0.9);
          const double b = uniform(rng, 0.05, 0.95 - a);
          const std::array<double, 3> lam{1.0 - a - b, a, b};
          pts.push_back(bbinterp::cartesian_point(t, lam));
        } else {
          const int e1 = uniform_int(rng, 0, 2);
          const int e2 = (e1 + uniform_int(rng, 1, 2)) % 3;
          auto edge_point = [&](int e, double u) {
            const Point2& a = t.vertex(e);
            const Point2& b = t.vertex((e + 1) % 3);
            return Point2{a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
          };
          line = {edge_point(e1, uniform(rng, margin, 1.0 - margin)), edge_point(e2, uniform(rng, margin, 1.0 - margin))};
          const double gap = std::min(0.05, 0.5 / (j + 1));
          for (double s : spread(rng, j + 1, 0.05, 0.95, gap))
            pts.push_back({line.z1.x + s * (line.z2.x - line.z1.x), line.z1.y + s * (line.z2.y - line.z1.y)});
        }
        bool ok = true;
        for (const auto& l : lines)
          for (const auto& p : pts) ok = ok && l.gamma(t, p) >= separation;
        if (!ok) continue;
        NodeGroup g;
        g.nodes = pts;
        g.data = random_data(rng, pts.size());
        part.groups.push_back(std::move(g));
        if (j > 0) lines.push_back(line);
        placed = true;
      }
      failed = !placed;
    }
    if (!failed) return part;
  }
  throw std::runtime_error("random_partition: no configuration found");
}

/// Nearly parallel lines stacked towards the third vertex, each slightly
/// tilted: the well-conditioned family (lambda_3 levels (n+1-j)/(n+2)).
inline NodePartition banded_partition(std::mt19937& rng, int n, const Triangle2& t) {
  NodePartition part;
  const double step = 1.0 / (n + 2);
  for (int j = n; j >= 0; --j) {
    const double level = (n + 1 - j) * step;
    NodeGroup g;
    if (j == 0) {
      const double a = uniform(rng, 0.3, 0.7) * (1.0 - level);
      const std::array<double, 3> lam{1.0 - level - a, a, level};
      g.nodes.push_back(bbinterp::cartesian_point(t, lam));
    } else {
      const double l1 = level + uniform(rng, -0.2, 0.2) * step;
      const double l2 = level + uniform(rng, -0.2, 0.2) * step;
      const std::array<double, 3> left{1.0 - l1, 0.0, l1}, right{0.0, 1.0 - l2, l2};
      const Point2 z1 = bbinterp::cartesian_point(t, left), z2 = bbinterp::cartesian_point(t, right);
      for (double s : spread(rng, j + 1, 0.02, 0.98, 0.25 / (j + 1)))
        g.nodes.push_back({z1.x + s * (z2.x - z1.x), z1.y + s * (z2.y - z1.y)});
    }
    g.data = random_data(rng, g.nodes.size());
    part.groups.push_back(std::move(g));
  }
  return part;
}

inline Triangle2 random_triangle(std::mt19937& rng) {
  for (;;) {
    Point2 a{uniform(rng, -2, 2), uniform(rng, -2, 2)};
    Point2 b{uniform(rng, -2, 2), uniform(rng, -2, 2)};
    Point2 c{uniform(rng, -2, 2), uniform(rng, -2, 2)};
    const double area = 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
    if (std::abs(area) > 0.5) return {a, b, c};
  }
}

}  // namespace fixtures
