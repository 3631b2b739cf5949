#pragma once

// Problem and solution documents for the command-line tool.
//
// Problems are JSON. Numbers may be JSON numbers (taken at their double
// value) or strings such as "1/17" or "0.125", which the exact solver reads
// without rounding.
//
//   {"kind": "univariate", "nodes": [...], "data": [...], "ordering": "leja"}
//   {"kind": "tensor2d", "axes": [[x...], [y...]], "data": [...]}
//   {"kind": "tensor3d", "axes": [[x...], [y...], [z...]], "data": [...]}
//   {"kind": "simplex2d", "triangle": [[x,y], [x,y], [x,y]],
//    "groups": [{"nodes": [[x,y], ...], "data": [...]}, ...]}
//   {"kind": "simplex2d", "triangle": ..., "nodes": [[x,y], ...],
//    "data": [...], "partition": "auto"}
//
// Tensor data and coefficients are row-major with the x index slowest.
// Simplex groups run A_n first (n+1 collinear nodes) down to A_0; simplex
// coefficients use the canonical multi-index order.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bbinterp/exact.hpp"
#include "bbinterp/simplex2d.hpp"

namespace bbinterp::cli {

enum class ProblemKind { univariate, tensor2d, tensor3d, simplex2d };
enum class Ordering { given, ascending, leja };
enum class SolverKind { newton_bernstein, lu, exact };

std::string_view name_of(ProblemKind k);
std::string_view name_of(Ordering o);
std::string_view name_of(SolverKind s);
ProblemKind parse_kind(std::string_view s);
Ordering parse_ordering(std::string_view s);
SolverKind parse_solver(std::string_view s);

/// Dense solves above this many unknowns are refused.
inline constexpr std::size_t kMaxDenseUnknowns = 1500;

struct Problem {
  ProblemKind kind = ProblemKind::univariate;
  Ordering ordering = Ordering::given;

  // univariate: one axis; tensor: one per dimension
  std::vector<std::vector<double>> axes;
  std::vector<std::vector<Rational>> exact_axes;

  std::vector<double> data;
  std::vector<Rational> exact_data;

  // simplex2d; nodes are listed group by group when group_sizes is set
  std::array<Point2, 3> triangle{};
  std::array<RationalPoint, 3> exact_triangle{};
  std::vector<Point2> nodes;
  std::vector<RationalPoint> exact_nodes;
  std::vector<int> group_sizes;

  [[nodiscard]] std::size_t unknowns() const;
  [[nodiscard]] int simplex_degree() const;
};

struct Solution {
  ProblemKind kind = ProblemKind::univariate;
  SolverKind solver = SolverKind::newton_bernstein;
  Ordering ordering = Ordering::given;
  std::vector<int> degrees;
  std::array<Point2, 3> triangle{};
  std::vector<double> coeffs;
  std::vector<std::string> exact_coeffs;  // exact solver only
  double residual_max = 0.0;
  double elapsed_seconds = 0.0;
};

Problem parse_problem(std::string_view text);
Solution parse_solution(std::string_view text);

/// Serialises with 17 significant digits; elapsed_seconds is the last field.
std::string write_solution(const Solution& s);

/// Solves and fills residual_max; `ordering` overrides the problem's.
Solution solve(const Problem& p, SolverKind solver, std::optional<Ordering> ordering = std::nullopt);

/// Max |p(x_i) - f_i| over the problem's nodes.
double residual_max(const Solution& s, const Problem& p);

/// Point dimension expected by a solution (1, 2 or 3).
std::size_t point_dimension(ProblemKind k);
double evaluate(const Solution& s, std::span<const double> point);

/// One point per row; '#' lines and blank lines are skipped.
std::vector<std::vector<double>> parse_points_csv(std::string_view text, std::size_t dim);

/// Full collocation matrix of the problem (basis functions by nodes).
DenseMatrix assemble_matrix(const Problem& p);

std::string format_double(double v);
std::string read_file(const std::string& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace bbinterp::cli
