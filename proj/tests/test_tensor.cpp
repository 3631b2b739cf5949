#include <doctest.h>

#include <cmath>
#include <random>

#include "bbinterp/exact.hpp"
#include "bbinterp/reference_linalg.hpp"
#include "bbinterp/tensor_product.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace bbinterp;

namespace {

Nodes1D interior(int n, int shift = 1) {
  std::vector<double> x;
  for (int i = 0; i <= n; ++i) x.push_back(double(i + shift) / double(n + 2 * shift));
  return Nodes1D(x);
}

double grid_residual_2d(const TensorGrid2D& g, const TensorCoefficients& c) {
  double r = 0.0;
  for (std::size_t i = 0; i < g.xnodes.size(); ++i)
    for (std::size_t j = 0; j < g.ynodes.size(); ++j) {
      const double v = tensor_eval(c, std::array{g.xnodes[i], g.ynodes[j]});
      r = std::max(r, std::abs(v - g.data[i * g.ynodes.size() + j]));
    }
  return r;
}

double grid_residual_3d(const TensorGrid3D& g, const TensorCoefficients& c) {
  double r = 0.0;
  const std::size_t m = g.ynodes.size(), l = g.znodes.size();
  for (std::size_t i = 0; i < g.xnodes.size(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < l; ++k) {
        const double v = tensor_eval(c, std::array{g.xnodes[i], g.ynodes[j], g.znodes[k]});
        r = std::max(r, std::abs(v - g.data[(i * m + j) * l + k]));
      }
  return r;
}

}  // namespace

TEST_CASE("corner grids reproduce corner data") {
  const Nodes1D ends({0.0, 1.0});
  const TensorGrid2D g2{ends, ends, {1, 2, 3, 4}};
  CHECK(tensor_product_2d(g2).coeffs == std::vector<double>{1, 2, 3, 4});
  const TensorGrid3D g3{ends, ends, ends, {1, 2, 3, 4, 5, 6, 7, 8}};
  CHECK(tensor_product_3d(g3).coeffs == std::vector<double>{1, 2, 3, 4, 5, 6, 7, 8});
}

TEST_CASE("constant data gives constant coefficients") {
  const TensorGrid2D g2{interior(6), interior(4), std::vector<double>(35, 3.0)};
  for (double c : tensor_product_2d(g2).coeffs) CHECK(c == doctest::Approx(3.0).epsilon(1e-12));
  const TensorGrid3D g3{interior(3), interior(4), interior(2), std::vector<double>(60, -2.0)};
  for (double c : tensor_product_3d(g3).coeffs) CHECK(c == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("grid residual") {
  // low degrees: absolute bound against the data
  std::mt19937 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = fixtures::uniform_int(rng, 1, 4), m = fixtures::uniform_int(rng, 1, 4);
    TensorGrid2D g{interior(n), interior(m), fixtures::random_data(rng, std::size_t(n + 1) * std::size_t(m + 1))};
    const auto c = tensor_product_2d(g);
    CHECK(c.degrees == std::vector<int>{n, m});
    CHECK(grid_residual_2d(g, c) <= 1e-12 * oracle::max_abs(g.data));
  }
  // up to degree 12 the coefficients grow like the condition number, so the
  // residual is measured against the coefficient scale
  for (int trial = 0; trial < 12; ++trial) {
    const int n = fixtures::uniform_int(rng, 1, 12), m = fixtures::uniform_int(rng, 1, 12);
    TensorGrid2D g{interior(n), interior(m), fixtures::random_data(rng, std::size_t(n + 1) * std::size_t(m + 1))};
    const auto c = tensor_product_2d(g);
    CHECK(grid_residual_2d(g, c) <= 1e-14 * oracle::max_abs(c.coeffs));
  }
  for (int trial = 0; trial < 4; ++trial) {
    const int n = fixtures::uniform_int(rng, 1, 8), m = fixtures::uniform_int(rng, 1, 8),
              l = fixtures::uniform_int(rng, 1, 8);
    TensorGrid3D g{interior(n), interior(m), interior(l),
                   fixtures::random_data(rng, std::size_t(n + 1) * std::size_t(m + 1) * std::size_t(l + 1))};
    const auto c = tensor_product_3d(g);
    CHECK(grid_residual_3d(g, c) <= 1e-14 * oracle::max_abs(c.coeffs));
  }
}

TEST_CASE("sweep order does not matter") {
  std::mt19937 rng(32);
  const std::vector<Nodes1D> axes{interior(9), interior(7, 2)};
  auto f = fixtures::random_data(rng, 80);
  auto xy = f, yx = f;
  const std::vector<std::size_t> o1{0, 1}, o2{1, 0};
  detail::tensor_sweep(axes, xy, o1, LineSolver::newton_bernstein, true);
  detail::tensor_sweep(axes, yx, o2, LineSolver::newton_bernstein, true);
  CHECK(relative_error(xy, yx) <= 1e-12);

  const std::vector<Nodes1D> axes3{interior(4), interior(5), interior(3)};
  auto g = fixtures::random_data(rng, 5 * 6 * 4);
  auto a = g, b = g;
  const std::vector<std::size_t> p1{0, 1, 2}, p2{2, 0, 1};
  detail::tensor_sweep(axes3, a, p1, LineSolver::newton_bernstein, true);
  detail::tensor_sweep(axes3, b, p2, LineSolver::newton_bernstein, true);
  CHECK(relative_error(a, b) <= 1e-12);
}

TEST_CASE("separable data gives a rank-one coefficient array") {
  std::mt19937 rng(33);
  const Nodes1D x = interior(8), y = interior(6);
  const auto gx = fixtures::random_data(rng, x.size());
  const auto hy = fixtures::random_data(rng, y.size());
  TensorGrid2D grid{x, y, {}};
  for (double a : gx)
    for (double b : hy) grid.data.push_back(a * b);
  const auto c = tensor_product_2d(grid).coeffs;
  const auto u = newton_bernstein(x, gx).coeffs;
  const auto w = newton_bernstein(y, hy).coeffs;
  const double scale = oracle::max_abs(c);
  for (std::size_t k = 0; k < u.size(); ++k)
    for (std::size_t l = 0; l < w.size(); ++l) CHECK(std::abs(c[k * w.size() + l] - u[k] * w[l]) <= 1e-14 * scale);
}

TEST_CASE("agreement with the exact full system") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const bool three = trial % 3 == 2;
    std::vector<std::vector<double>> axes;
    for (int k = 0; k < (three ? 3 : 2); ++k)
      axes.push_back(fixtures::rational_nodes(rng, fixtures::uniform_int(rng, 1, three ? 4 : 6), true));
    std::size_t total = 1;
    for (const auto& a : axes) total *= a.size();
    std::vector<double> f;
    for (std::size_t i = 0; i < total; ++i) f.push_back(fixtures::uniform_int(rng, -3, 3));

    std::vector<std::vector<oracle::Q>> qaxes;
    for (const auto& a : axes) qaxes.push_back(oracle::to_q(a));
    const auto ref = oracle::interpolate_tensor(qaxes, oracle::to_q(f));
    if (oracle::max_abs(oracle::to_d(ref)) == 0.0) continue;

    std::vector<double> got;
    if (three) got = tensor_product_3d({Nodes1D(axes[0]), Nodes1D(axes[1]), Nodes1D(axes[2]), f}).coeffs;
    else got = tensor_product_2d({Nodes1D(axes[0]), Nodes1D(axes[1]), f}).coeffs;
    CHECK(oracle::rel_error(oracle::to_d(ref), got) <= 1e-11);

    // the library's two exact paths agree with the test oracle exactly
    std::vector<std::vector<Rational>> la;
    for (const auto& a : axes) la.push_back(to_rational(a));
    const auto kron = exact_solve_tensor(la, to_rational(f), TensorOracle::kronecker);
    const auto full = exact_solve_tensor(la, to_rational(f), TensorOracle::full);
    REQUIRE(kron.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(kron[i] == ref[i]);
      CHECK(full[i] == ref[i]);
    }
  }
}

TEST_CASE("parallel sweeps match the serial reference bit for bit") {
  std::mt19937 rng(35);
  const TensorGrid2D g2{interior(15), interior(15, 2), fixtures::random_data(rng, 256)};
  CHECK(tensor_product_2d(g2).coeffs == serial::tensor_product_2d(g2).coeffs);
  const TensorGrid3D g3{interior(10), interior(9), interior(11), fixtures::random_data(rng, 11 * 10 * 12)};
  CHECK(tensor_product_3d(g3).coeffs == serial::tensor_product_3d(g3).coeffs);

  // wide grids exercise the chunked block kernel
  const TensorGrid2D wide{interior(5), interior(300), fixtures::random_data(rng, 6 * 301)};
  CHECK(tensor_product_2d(wide).coeffs == serial::tensor_product_2d(wide).coeffs);
}

TEST_CASE("LU line solver agrees on well-conditioned grids") {
  std::mt19937 rng(36);
  const TensorGrid2D g{interior(5), interior(6), fixtures::random_data(rng, 42)};
  CHECK(relative_error(tensor_product_2d(g).coeffs, tensor_product_2d(g, LineSolver::lu).coeffs) <= 1e-12);
  const TensorGrid3D h{interior(4), interior(3), interior(5), fixtures::random_data(rng, 120)};
  CHECK(relative_error(tensor_product_3d(h).coeffs, tensor_product_3d(h, LineSolver::lu).coeffs) <= 1e-12);
}

TEST_CASE("evaluation of a tensor form") {
  // p(x, y) = x * y has all-zero coefficients except c_{n,m} = 1 in degree (1,1)
  const TensorCoefficients c{{1, 1}, {0, 0, 0, 1}};
  CHECK(tensor_eval(c, std::array{0.3, 0.7}) == doctest::Approx(0.21));
  CHECK_THROWS_AS(tensor_eval(c, std::array{0.3}), Error);
}
