#include <doctest.h>

#include <cmath>
#include <random>

#include "bbinterp/bb_core.hpp"
#include "oracles.hpp"

using namespace bbinterp;

TEST_CASE("bernstein basis values") {
  CHECK(bernstein_eval_1d(1, 1, 0.5) == doctest::Approx(0.5));
  CHECK(bernstein_eval_1d(2, 1, 0.5) == doctest::Approx(0.5));
  CHECK(bernstein_eval_1d(15, 0, 1.0) == 0.0);
  CHECK_THROWS_AS(bernstein_eval_1d(3, 4, 0.2), Error);
  CHECK_THROWS_AS(bernstein_eval_1d(3, -1, 0.2), Error);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n <= 20; ++n)
    for (int k = 0; k <= n; ++k) {
      const double x = u(rng);
      CHECK(std::abs(bernstein_eval_1d(n, k, x) - oracle::bernstein(n, k, x)) <= 1e-14);
    }
}

TEST_CASE("partition of unity") {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n <= 30; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const double x = u(rng);
      double s = 0.0;
      for (int k = 0; k <= n; ++k) s += bernstein_eval_1d(n, k, x);
      CHECK(std::abs(s - 1.0) <= 1e-13);
    }
  }
  for (int n = 0; n <= 12; ++n) {
    const auto idx = enumerate_multi_indices(2, n);
    for (int trial = 0; trial < 20; ++trial) {
      const double a = u(rng), b = u(rng) * (1.0 - a);
      const std::array<double, 3> lam{a, b, 1.0 - a - b};
      double s = 0.0;
      for (const auto& alpha : idx) s += simplex_bernstein_eval(alpha, lam);
      CHECK(std::abs(s - 1.0) <= 1e-13);
    }
  }
}

TEST_CASE("de Casteljau evaluation") {
  const std::vector<double> c{0, 2, 0};
  CHECK(de_casteljau_1d(c, 0.5) == doctest::Approx(1.0));
  CHECK(de_casteljau_1d(c, 0.0) == 0.0);
  CHECK(de_casteljau_1d(std::vector<double>{7, 7, 7, 7}, 0.3) == doctest::Approx(7.0));

  std::mt19937 rng(13);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int n = 0; n <= 15; ++n) {
    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1);
    for (auto& v : coeffs) v = u(rng);
    // endpoints are exact
    CHECK(de_casteljau_1d(coeffs, 0.0) == coeffs.front());
    CHECK(de_casteljau_1d(coeffs, 1.0) == coeffs.back());
    for (int t = 0; t < 10; ++t) {
      const double x = (u(rng) + 3.0) / 6.0;
      CHECK(std::abs(de_casteljau_1d(coeffs, x) - oracle::poly_1d(coeffs, x)) <= 1e-12);
    }
  }
}

TEST_CASE("degree raising") {
  CHECK(degree_raise_1d({{1, 1}}).coeffs == std::vector<double>{1, 1, 1});
  const auto r = degree_raise_1d({{0, 1}}).coeffs;
  REQUIRE(r.size() == 3);
  CHECK(r[0] == 0.0);
  CHECK(r[1] == doctest::Approx(0.5));
  CHECK(r[2] == 1.0);

  std::mt19937 rng(14);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const ControlVector1D bump{{0, 2, 0}};
  const auto raised = degree_raise_1d(bump);
  for (int t = 0; t < 20; ++t) {
    const double x = u(rng);
    CHECK(std::abs(de_casteljau_1d(raised, x) - de_casteljau_1d(bump, x)) <= 1e-14);
  }
  for (int n = 0; n <= 20; ++n) {
    ControlVector1D c;
    for (int k = 0; k <= n; ++k) c.coeffs.push_back(u(rng) * 10 - 5);
    const auto up = degree_raise_1d(c);
    CHECK(up.degree() == n + 1);
    for (int t = 0; t < 50; ++t) {
      const double x = u(rng);
      const double v = de_casteljau_1d(c, x);
      CHECK(std::abs(de_casteljau_1d(up, x) - v) <= 1e-13 * (1.0 + std::abs(v)));
    }
  }
}

TEST_CASE("multi-index enumeration and ranks") {
  const auto one = enumerate_multi_indices(2, 1);
  CHECK(one == std::vector<MultiIndex>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const auto two = enumerate_multi_indices(2, 2);
  CHECK(two == std::vector<MultiIndex>{{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}});
  CHECK(enumerate_multi_indices(1, 3).size() == 4);

  for (int d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 7; ++n) {
      const auto idx = enumerate_multi_indices(d, n);
      CHECK(idx.size() == simplex_basis_size(d, n));
      for (std::size_t i = 0; i < idx.size(); ++i) {
        CHECK(multi_index_rank(idx[i]) == i);
        if (i > 0) CHECK(idx[i - 1] > idx[i]);  // strictly descending lexicographically
      }
    }
  }
  // same order as the independent enumeration
  const auto ref = oracle::indices_2d(5);
  const auto lib = enumerate_multi_indices(2, 5);
  REQUIRE(ref.size() == lib.size());
  for (std::size_t i = 0; i < ref.size(); ++i)
    CHECK((lib[i] == MultiIndex{ref[i][0], ref[i][1], ref[i][2]}));
}

TEST_CASE("barycentric coordinates") {
  const auto t = Triangle2::unit();
  const auto c = barycentric_coords(t, {1.0 / 3, 1.0 / 3});
  for (double l : c) CHECK(l == doctest::Approx(1.0 / 3));
  const auto v = barycentric_coords(t, {1.0, 0.0});
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[1] == doctest::Approx(1.0));
  CHECK(v[2] == doctest::Approx(0.0));
  const auto e = barycentric_coords(t, {2.0, 0.0});
  CHECK(e[0] == doctest::Approx(-1.0));
  CHECK(e[1] == doctest::Approx(2.0));
  CHECK(e[2] == doctest::Approx(0.0));

  CHECK_THROWS_AS(Triangle2({0, 0}, {1, 1}, {2, 2}), Error);

  std::mt19937 rng(15);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, cc{u(rng), u(rng)};
    if (std::abs((b.x - a.x) * (cc.y - a.y) - (cc.x - a.x) * (b.y - a.y)) < 0.1) continue;
    const Triangle2 tri(a, b, cc);
    const Point2 p{u(rng), u(rng)};
    const auto lam = barycentric_coords(tri, p);
    CHECK(std::abs(lam[0] + lam[1] + lam[2] - 1.0) <= 1e-13);
    const auto back = cartesian_point(tri, lam);
    CHECK(std::hypot(back.x - p.x, back.y - p.y) <= 1e-13 * tri.diameter() * 10);
  }
}

TEST_CASE("simplex de Casteljau") {
  SimplexCoefficients five{2, 3, std::vector<double>(10, 5.0)};
  CHECK(de_casteljau_simplex(five, std::array<double, 3>{0.2, 0.5, 0.3}) == doctest::Approx(5.0));

  SimplexCoefficients corner{2, 3, std::vector<double>(10, 0.0)};
  corner.coeffs[0] = 1.0;
  CHECK(de_casteljau_simplex(corner, std::array<double, 3>{1, 0, 0}) == doctest::Approx(1.0));

  SimplexCoefficients mid{2, 2, std::vector<double>(6, 0.0)};
  mid.coeffs[1] = 1.0;  // (1,1,0)
  CHECK(de_casteljau_simplex(mid, std::array<double, 3>{0.5, 0.5, 0.0}) == doctest::Approx(0.5));

  std::mt19937 rng(16);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 0; n <= 10; ++n) {
    SimplexCoefficients c{2, n, {}};
    for (std::size_t i = 0; i < simplex_basis_size(2, n); ++i) c.coeffs.push_back(u(rng) * 4 - 2);
    for (int t = 0; t < 10; ++t) {
      const double a = u(rng), b = u(rng) * (1 - a);
      const std::array<double, 3> lam{a, b, 1 - a - b};
      CHECK(std::abs(de_casteljau_simplex(c, lam) - oracle::simplex_poly(c.coeffs, n, lam)) <= 1e-12);
    }
  }
}

TEST_CASE("product with an affine function") {
  const SimplexCoefficients one{2, 0, {1.0}};
  const auto g = bb_product_affine(one, AffineBB{0.3, -0.7, 2.0});
  CHECK(g.degree == 1);
  CHECK(g.coeffs == std::vector<double>{0.3, -0.7, 2.0});

  const SimplexCoefficients ones{2, 1, {1, 1, 1}};
  const auto sq = bb_product_affine(ones, AffineBB{1, 1, 1});
  CHECK(sq.degree == 2);
  for (double v : sq.coeffs) CHECK(v == doctest::Approx(1.0));

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int j = 0; j <= 10; ++j) {
    SimplexCoefficients c{2, j, {}};
    for (std::size_t i = 0; i < simplex_basis_size(2, j); ++i) c.coeffs.push_back(u(rng) * 2 - 1);
    const AffineBB gg{u(rng) * 2 - 1, u(rng) * 2 - 1, u(rng) * 2 - 1};
    const auto prod = bb_product_affine(c, gg);
    CHECK(prod.degree == j + 1);
    for (int t = 0; t < 20; ++t) {
      const double a = u(rng), b = u(rng) * (1 - a);
      const std::array<double, 3> lam{a, b, 1 - a - b};
      const double lhs = de_casteljau_simplex(prod, lam);
      const double rhs = de_casteljau_simplex(c, lam) * (gg[0] * lam[0] + gg[1] * lam[1] + gg[2] * lam[2]);
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("generic-scalar helpers agree with the double versions") {
  const std::vector<double> c{1.5, -2.0, 0.25, 3.0};
  CHECK(de_casteljau<double>(c, 0.3) == doctest::Approx(de_casteljau_1d(c, 0.3)));
  CHECK(bernstein_basis<double>(5, 2, 0.4) == doctest::Approx(bernstein_eval_1d(5, 2, 0.4)));
  const std::vector<mpq_class> q{1, 2, 0};
  CHECK(de_casteljau<mpq_class>(q, mpq_class(1, 2)) == mpq_class(5, 4));
}
