#pragma once

// Lagrange interpolation in Bernstein-Bezier form on a triangle.
//
// The nodes must split into groups A_n, A_{n-1}, ..., A_0 with |A_j| = j+1,
// each group on its own line gamma_j and off every earlier line. The
// interpolant is built in Newton form
//
//   p = sum_j q_j * prod_{i>j} Gamma_i,
//
// where Gamma_i is an affine function vanishing on gamma_i and q_j solves a
// univariate problem on gamma_j, extended to the whole triangle.
//
// Numerical thresholds (not fixed by the underlying theory):
//   collinearity of a group       1e-10 * triangle diameter
//   |Gamma_j(x_i)| divisor floor   1e-12 (Gamma normalised to max |G| = 1)

#include <optional>
#include <span>
#include <vector>

#include "bbinterp/bb_core.hpp"
#include "bbinterp/newton_bernstein.hpp"

namespace bbinterp {

struct NodeGroup {
  std::vector<Point2> nodes;
  std::vector<double> data;
};

/// groups[0] = A_n, groups[1] = A_{n-1}, ..., groups[n] = A_0.
struct NodePartition {
  std::vector<NodeGroup> groups;

  [[nodiscard]] int degree() const { return static_cast<int>(groups.size()) - 1; }
  /// Nodes in group order (A_n first).
  [[nodiscard]] std::vector<Point2> all_nodes() const;
  [[nodiscard]] std::vector<double> all_data() const;
};

/// gamma_j intersected with the triangle: the chord conv{z1, z2}. kappa
/// (1-based) is the vertex separated from the other two by the line.
struct LineSegmentInTriangle {
  Point2 z1;
  Point2 z2;
  int kappa = 3;
};

/// Checks group sizes, collinearity and distinctness. Throws partition errors.
void validate_partition(const NodePartition& p, const Triangle2& t);

/// Affine function vanishing on the line through `group`, as vertex values
/// normalised to max |G_k| = 1. The line normal is oriented with a positive
/// x component (or positive y component for horizontal lines).
AffineBB bb_affine(std::span<const Point2> group, const Triangle2& t);

/// Intersection of the zero line of G with the triangle boundary.
LineSegmentInTriangle gcap_t(const AffineBB& g, const Triangle2& t);

/// Chord used by the solver. Same as gcap_t, except that lines along an
/// edge or through exactly one vertex are accepted.
LineSegmentInTriangle line_chord(const AffineBB& g, const Triangle2& t);

/// Normalised distance of each node from z1 along the chord.
std::vector<double> transform_1d(std::span<const Point2> group, const LineSegmentInTriangle& seg);

/// Extends the univariate Bezier form on the chord to the triangle; the result
/// has zero coefficients wherever alpha_kappa > 0.
SimplexCoefficients bb_extension(const ControlVector1D& cgamma, const LineSegmentInTriangle& seg,
                                 const Triangle2& t);

/// Intermediate quantities of one solve, for inspection.
struct SimplexTrace {
  std::vector<AffineBB> gammas;                // G for A_n .. A_1
  std::vector<LineSegmentInTriangle> segments; // per line
  std::vector<ControlVector1D> line_solutions; // c^gamma_j
  std::vector<SimplexCoefficients> extensions; // q_j on the triangle, j = n..0
  std::vector<SimplexCoefficients> products;   // prod_{i>j} Gamma_i, j = n..0
};

SimplexCoefficients newton_bernstein_2d(const NodePartition& partition, const Triangle2& t,
                                        SimplexTrace* trace = nullptr);

/// Greedy search (with backtracking) for a valid node partition. Best-effort.
NodePartition detect_partition(std::span<const Point2> nodes, std::span<const double> data,
                               double tol = 1e-10);

/// Value of a simplex Bezier form at a cartesian point.
double simplex_eval(const SimplexCoefficients& c, const Triangle2& t, Point2 p);

}  // namespace bbinterp
