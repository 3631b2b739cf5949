#include "bbinterp/exact.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace bbinterp {

namespace {

Error parse_error(std::string_view text) {
  return Error(ErrorCode::parse, "not a rational number: '" + std::string(text) + "'");
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw parse_error(whole);
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw parse_error(whole);
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw parse_error(whole);
  mpz_class z(std::string(s.substr(s[0] == '+' ? 1 : 0)), 10);
  return z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rational multinomial_q(std::span<const int> alpha) {
  int n = 0;
  mpz_class num = 1, den = 1, f;
  for (int a : alpha) {
    n += a;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
    den *= f;
  }
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(num, den);
}

Rational simplex_basis_q(std::span<const int> alpha, const std::array<Rational, 3>& lambda) {
  Rational r = multinomial_q(alpha);
  for (std::size_t k = 0; k < alpha.size(); ++k)
    for (int e = 0; e < alpha[k]; ++e) r *= lambda[k];
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw parse_error(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const mpz_class p = parse_integer(trim(s.substr(0, slash)), text);
    const mpz_class q = parse_integer(trim(s.substr(slash + 1)), text);
    if (q == 0) throw Error(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (digits.empty()) throw parse_error(text);
  long exponent = 0;
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') throw parse_error(text);
    exponent = parse_integer(s.substr(i + 1), text).get_si();
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - frac;
  Rational r = shift >= 0 ? Rational(num * pow10(static_cast<unsigned long>(shift)))
                          : Rational(num, pow10(static_cast<unsigned long>(-shift)));
  r.canonicalize();
  return r;
}

Rational to_rational(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::validation, "non-finite value");
  return Rational(v);
}

std::vector<Rational> to_rational(std::span<const double> v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (double d : v) out.push_back(to_rational(d));
  return out;
}

double to_double(const Rational& q) {
  const double d = q.get_d();  // truncates toward zero
  if (Rational(d) == q) return d;
  const double away = std::nextafter(d, q > 0 ? std::numeric_limits<double>::infinity()
                                               : -std::numeric_limits<double>::infinity());
  const Rational e1 = abs(q - Rational(d));
  const Rational e2 = abs(Rational(away) - q);
  return e2 < e1 ? away : d;
}

std::vector<double> to_double(std::span<const Rational> q) {
  std::vector<double> out;
  out.reserve(q.size());
  for (const auto& v : q) out.push_back(to_double(v));
  return out;
}

std::string to_string(const Rational& q) {
  Rational r = q;
  r.canonicalize();
  return r.get_str();
}

RationalMatrix bareiss_solve(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows != a.cols || b.rows != a.rows) throw Error(ErrorCode::validation, "bareiss_solve shape mismatch");
  const std::size_t n = a.rows, m = b.cols, w = n + m;

  // Clear denominators row by row; this leaves the solution unchanged.
  std::vector<mpz_class> mat(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) mat[i * w + j] = a(i, j).get_num() * (l / a(i, j).get_den());
    for (std::size_t j = 0; j < m; ++j) mat[i * w + n + j] = b(i, j).get_num() * (l / b(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return mat[i * w + j]; };

  mpz_class prev = 1, t1, t2;
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && at(piv, k) == 0) ++piv;
      if (piv == n) throw Error(ErrorCode::singular_matrix, "matrix is exactly singular");
      for (std::size_t j = 0; j < w; ++j) std::swap(at(k, j), at(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < w; ++j) {
        t1 = at(k, k) * at(i, j);
        t2 = at(i, k) * at(k, j);
        t1 -= t2;
        mpz_divexact(at(i, j).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }

  RationalMatrix x(n, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = n; i-- > 0;) {
      Rational acc(at(i, n + r));
      for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(at(i, j)) * x(j, r);
      acc /= Rational(at(i, i));
      x(i, r) = acc;
    }
  }
  return x;
}

std::vector<Rational> bareiss_solve(const RationalMatrix& a, std::span<const Rational> b) {
  RationalMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  const auto x = bareiss_solve(a, rhs);
  return x.entries;
}

std::vector<Rational> exact_solve_1d(std::span<const Rational> nodes, std::span<const Rational> f) {
  if (nodes.size() != f.size()) throw Error(ErrorCode::validation, "data count does not match node count");
  return bareiss_solve(transpose(assemble_bv_matrix_t<Rational>(nodes)), f);
}

std::vector<Rational> exact_solve_tensor(std::span<const std::vector<Rational>> axes,
                                         std::span<const Rational> f, TensorOracle method) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  if (total != f.size()) throw Error(ErrorCode::validation, "tensor data shape does not match node counts");

  if (method == TensorOracle::full) {
    RationalMatrix a = assemble_bv_matrix_t<Rational>(std::span<const Rational>(axes[0]));
    for (std::size_t k = 1; k < axes.size(); ++k)
      a = kronecker(a, assemble_bv_matrix_t<Rational>(std::span<const Rational>(axes[k])));
    return bareiss_solve(transpose(a), f);
  }

  std::vector<Rational> values(f.begin(), f.end());
  for (std::size_t axis = 0; axis < axes.size(); ++axis) {
    std::size_t outer = 1, inner = 1;
    for (std::size_t k = 0; k < axis; ++k) outer *= axes[k].size();
    for (std::size_t k = axis + 1; k < axes.size(); ++k) inner *= axes[k].size();
    const std::size_t len = axes[axis].size();
    const auto m = transpose(assemble_bv_matrix_t<Rational>(std::span<const Rational>(axes[axis])));
    RationalMatrix rhs(len, outer * inner);
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t r = 0; r < inner; ++r) rhs(i, o * inner + r) = values[(o * len + i) * inner + r];
    const auto sol = bareiss_solve(m, rhs);
    for (std::size_t o = 0; o < outer; ++o)
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t r = 0; r < inner; ++r) values[(o * len + i) * inner + r] = sol(i, o * inner + r);
  }
  return values;
}

std::array<Rational, 3> exact_barycentric(std::span<const RationalPoint> t, const RationalPoint& p) {
  const auto& a = t[0];
  const auto& b = t[1];
  const auto& c = t[2];
  const Rational det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
  if (det == 0) throw Error(ErrorCode::geometry, "degenerate triangle");
  const Rational l2 = ((p.x - a.x) * (c.y - a.y) - (c.x - a.x) * (p.y - a.y)) / det;
  const Rational l3 = ((b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y)) / det;
  return {Rational(1) - l2 - l3, l2, l3};
}

std::vector<Rational> exact_solve_simplex(int degree, std::span<const RationalPoint> triangle,
                                          std::span<const RationalPoint> nodes,
                                          std::span<const Rational> f) {
  const auto indices = enumerate_multi_indices(2, degree);
  if (nodes.size() != indices.size() || f.size() != indices.size()) {
    throw Error(ErrorCode::validation, "simplex node count does not match the degree");
  }
  RationalMatrix m(nodes.size(), indices.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto lambda = exact_barycentric(triangle, nodes[i]);
    for (std::size_t k = 0; k < indices.size(); ++k) m(i, k) = simplex_basis_q(indices[k], lambda);
  }
  return bareiss_solve(m, f);
}

Rational exact_eval_1d(std::span<const Rational> c, const Rational& x) {
  return de_casteljau<Rational>(c, x);
}

Rational exact_eval_simplex(int degree, std::span<const Rational> c, const std::array<Rational, 3>& lambda) {
  const auto indices = enumerate_multi_indices(2, degree);
  Rational acc = 0;
  for (std::size_t k = 0; k < indices.size(); ++k) acc += c[k] * simplex_basis_q(indices[k], lambda);
  return acc;
}

namespace {

std::vector<Extended> to_extended(std::span<const double> v) {
  return std::vector<Extended>(v.begin(), v.end());
}

}  // namespace

std::vector<double> extended_solve_1d(std::span<const double> nodes, std::span<const double> f) {
  const auto x = to_extended(nodes);
  const auto rhs = to_extended(f);
  const auto a = transpose(assemble_bv_matrix_t<Extended>(std::span<const Extended>(x)));
  const auto c = lu_solve_t<Extended>(a, rhs);
  std::vector<double> out;
  for (const auto& v : c) out.push_back(v.convert_to<double>());
  return out;
}

std::vector<double> extended_solve_tensor(std::span<const std::vector<double>> axes,
                                          std::span<const double> f) {
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  if (total != f.size()) throw Error(ErrorCode::validation, "tensor data shape does not match node counts");
  auto values = to_extended(f);
  for (std::size_t axis = 0; axis < axes.size(); ++axis) {
    std::size_t outer = 1, inner = 1;
    for (std::size_t k = 0; k < axis; ++k) outer *= axes[k].size();
    for (std::size_t k = axis + 1; k < axes.size(); ++k) inner *= axes[k].size();
    const std::size_t len = axes[axis].size();
    const auto x = to_extended(axes[axis]);
    const LuFactorization<Extended> lu(transpose(assemble_bv_matrix_t<Extended>(std::span<const Extended>(x))));
    std::vector<Extended> line(len);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t r = 0; r < inner; ++r) {
        for (std::size_t i = 0; i < len; ++i) line[i] = values[(o * len + i) * inner + r];
        const auto c = lu.solve(line);
        for (std::size_t i = 0; i < len; ++i) values[(o * len + i) * inner + r] = c[i];
      }
    }
  }
  std::vector<double> out;
  for (const auto& v : values) out.push_back(v.convert_to<double>());
  return out;
}

}  // namespace bbinterp
