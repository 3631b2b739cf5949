#pragma once

// The six benchmark experiments: node sets, right-hand sides and the error
// tables comparing the solvers against a high-accuracy reference.
//
// Random integer data comes from a 32-bit linear congruential generator
//
//   state <- 1664525 * state + 1013904223  (mod 2^32)
//   value  = lo + ((state >> 16) mod (hi - lo + 1))
//
// with fixed seeds, so every table is reproducible bit for bit.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bbinterp/simplex2d.hpp"
#include "bbinterp/tensor_product.hpp"

namespace bbinterp {

class Lcg {
 public:
  explicit Lcg(std::uint32_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = 1664525u * state_ + 1013904223u;
    return state_;
  }

  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint32_t>(hi - lo + 1);
    return lo + static_cast<int>((next() >> 16) % span);
  }

 private:
  std::uint32_t state_;
};

std::vector<double> lcg_integers(std::uint32_t seed, std::size_t count, int lo = -3, int hi = 3);

inline constexpr std::uint32_t kExample4Seeds[2] = {4001u, 4002u};
inline constexpr std::uint32_t kExample5Seeds[2] = {5001u, 5002u};
inline constexpr std::uint32_t kExample6Seeds[2] = {6001u, 6002u};

/// Relative errors, one row per right-hand side and one column per solver.
struct ExperimentTable {
  int example = 0;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<double>> errors;
  std::vector<std::pair<std::string, double>> metrics;

  [[nodiscard]] double error(std::string_view row, std::string_view column) const;
  [[nodiscard]] double metric(std::string_view name) const;
  [[nodiscard]] std::vector<double> column(std::string_view name) const;
};

std::string to_csv(const ExperimentTable& table);
std::string to_text(const ExperimentTable& table);

// Node sets and data.

/// x_i = (i+1)/17, i = 0..15.
std::vector<double> example1_nodes();
/// f1 = (1 - x_j)^15, then the two listed integer vectors.
std::vector<std::vector<double>> example1_rhs();

std::vector<double> example2_nodes();
/// Left singular vectors of the collocation matrix, largest singular value
/// first (u_16, ..., u_1 when singular values are indexed ascending).
std::vector<std::vector<double>> example2_rhs();

/// Zeros of T_26 mapped to [0,1] by x -> (x+1)/2, ascending.
std::vector<double> example3_nodes();
std::vector<std::vector<double>> example3_rhs();

std::vector<TensorGrid2D> example4_grids();
std::vector<TensorGrid3D> example5_grids();

/// Degree 10 on the unit triangle. Group A_j lies on the horizontal line
/// y = (11 - j)/12 with nodes x = (1 - y)(i+1)/(j+2), i = 0..j. Data
/// alternate in sign with LCG magnitudes in 1..3.
Triangle2 example6_triangle();
std::vector<NodePartition> example6_partitions();

ExperimentTable run_example(int id);

}  // namespace bbinterp
