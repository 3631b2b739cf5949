#pragma once

// Ground-truth channels for accuracy checks.
//
// Rational: GMP rationals with fraction-free (Bareiss) elimination of the
// Bernstein-Vandermonde system. Used whenever nodes and geometry are exactly
// rational (every double is).
//
// Extended: binary floating point with a 168-bit mantissa and LU with
// partial pivoting. Used where the exact channel would be too slow; at the
// condition numbers involved (< 1e16) its results agree with the exact
// solution to far beyond double precision.

#include <gmpxx.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bbinterp/reference_linalg.hpp"

namespace bbinterp {

using Rational = mpq_class;
using Extended = boost::multiprecision::cpp_bin_float_50;
using RationalMatrix = BasicMatrix<Rational>;

struct RationalPoint {
  Rational x;
  Rational y;
};

/// Accepts "p/q", integers and decimals with optional exponent ("-1.25e-3").
Rational parse_rational(std::string_view text);

/// Exact value of a double.
Rational to_rational(double v);
std::vector<Rational> to_rational(std::span<const double> v);

/// Correctly rounded (to nearest) conversion.
double to_double(const Rational& q);
std::vector<double> to_double(std::span<const Rational> q);

std::string to_string(const Rational& q);

/// Solves a x = b column-by-column for every column of b (rows(b) = rows(a)).
/// Throws singular_matrix if a is exactly singular.
RationalMatrix bareiss_solve(const RationalMatrix& a, const RationalMatrix& b);
std::vector<Rational> bareiss_solve(const RationalMatrix& a, std::span<const Rational> b);

/// Control points of the univariate interpolant, exactly.
std::vector<Rational> exact_solve_1d(std::span<const Rational> nodes, std::span<const Rational> f);

enum class TensorOracle {
  kronecker,  // exact axis-by-axis elimination, same result as the full system
  full,       // exact elimination of the assembled full system
};

/// Tensor interpolation; f and the result use the row-major, x-slowest layout.
std::vector<Rational> exact_solve_tensor(std::span<const std::vector<Rational>> axes,
                                         std::span<const Rational> f,
                                         TensorOracle method = TensorOracle::kronecker);

/// Simplex interpolation of degree n; result in canonical multi-index order.
std::vector<Rational> exact_solve_simplex(int degree, std::span<const RationalPoint> triangle,
                                          std::span<const RationalPoint> nodes,
                                          std::span<const Rational> f);

std::array<Rational, 3> exact_barycentric(std::span<const RationalPoint> triangle, const RationalPoint& p);
Rational exact_eval_1d(std::span<const Rational> c, const Rational& x);
Rational exact_eval_simplex(int degree, std::span<const Rational> c, const std::array<Rational, 3>& lambda);

/// Extended-precision univariate solve from double nodes and data.
std::vector<double> extended_solve_1d(std::span<const double> nodes, std::span<const double> f);

/// Extended-precision tensor solve, axis by axis.
std::vector<double> extended_solve_tensor(std::span<const std::vector<double>> axes,
                                          std::span<const double> f);

}  // namespace bbinterp
