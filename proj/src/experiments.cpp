#include "bbinterp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "bbinterp/exact.hpp"
#include "bbinterp/reference_linalg.hpp"

namespace bbinterp {

namespace {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> solve_lu_1d(const std::vector<double>& nodes, const std::vector<double>& f) {
  return lu_solve(transpose(assemble_bv_matrix(Nodes1D(nodes))), f);
}

std::vector<double> exact_reference_1d(const std::vector<double>& nodes, const std::vector<double>& f) {
  const auto q = exact_solve_1d(to_rational(nodes), to_rational(f));
  return to_double(q);
}

std::vector<double> solve_nb_1d(const std::vector<double>& nodes, const std::vector<double>& f) {
  return newton_bernstein(Nodes1D(nodes), f).coeffs;
}

std::vector<double> solve_nb_leja(const std::vector<double>& nodes, const std::vector<double>& f) {
  const Nodes1D x(nodes);
  const auto perm = leja_order(x);
  std::vector<double> g(f.size());
  for (std::size_t i = 0; i < perm.size(); ++i) g[i] = f[perm[i]];
  return newton_bernstein(x.permuted(perm), g).coeffs;
}

std::string label(std::size_t i) { return "f" + std::to_string(i + 1); }

double kronecker_condition(std::span<const Nodes1D> axes) {
  double k = 1.0;
  for (const auto& a : axes) k *= condition_number(assemble_bv_matrix(a));
  return k;
}

template <class Grid>
std::vector<Nodes1D> grid_axes(const Grid& g) {
  if constexpr (requires { g.znodes; }) return {g.xnodes, g.ynodes, g.znodes};
  else return {g.xnodes, g.ynodes};
}

std::vector<std::vector<double>> axis_values(std::span<const Nodes1D> axes) {
  std::vector<std::vector<double>> out;
  for (const auto& a : axes) out.emplace_back(a.values().begin(), a.values().end());
  return out;
}

std::vector<double> ratio_nodes(int count, int offset, int denom) {
  std::vector<double> x(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) x[static_cast<std::size_t>(i)] = double(i + offset) / double(denom);
  return x;
}

ExperimentTable example1() {
  ExperimentTable t;
  t.example = 1;
  t.title = "Uniform nodes (i+1)/17, n = 15";
  t.columns = {"lu", "newton_bernstein"};
  const auto x = example1_nodes();
  const auto rhs = example1_rhs();
  for (std::size_t r = 0; r < rhs.size(); ++r) {
    const auto exact = exact_reference_1d(x, rhs[r]);
    t.rows.push_back(label(r));
    t.errors.push_back({relative_error(exact, solve_lu_1d(x, rhs[r])),
                        relative_error(exact, solve_nb_1d(x, rhs[r]))});
  }
  t.metrics.emplace_back("kappa", condition_number(assemble_bv_matrix(Nodes1D(x))));
  return t;
}

ExperimentTable example2() {
  ExperimentTable t;
  t.example = 2;
  t.title = "Clustered rational nodes, singular-vector right-hand sides, n = 15";
  t.columns = {"lu", "newton_bernstein"};
  const auto x = example2_nodes();
  const auto rhs = example2_rhs();
  for (std::size_t r = 0; r < rhs.size(); ++r) {
    const auto exact = exact_reference_1d(x, rhs[r]);
    t.rows.push_back(label(r));
    t.errors.push_back({relative_error(exact, solve_lu_1d(x, rhs[r])),
                        relative_error(exact, solve_nb_1d(x, rhs[r]))});
  }
  t.metrics.emplace_back("kappa", condition_number(assemble_bv_matrix(Nodes1D(x))));
  return t;
}

ExperimentTable example3() {
  ExperimentTable t;
  t.example = 3;
  t.title = "Chebyshev zeros mapped to [0,1], n = 25";
  t.columns = {"lu", "newton_bernstein_leja", "newton_bernstein"};
  const auto x = example3_nodes();
  const auto rhs = example3_rhs();
  for (std::size_t r = 0; r < rhs.size(); ++r) {
    const auto ref = extended_solve_1d(x, rhs[r]);
    t.rows.push_back(label(r));
    t.errors.push_back({relative_error(ref, solve_lu_1d(x, rhs[r])),
                        relative_error(ref, solve_nb_leja(x, rhs[r])),
                        relative_error(ref, solve_nb_1d(x, rhs[r]))});
  }
  t.metrics.emplace_back("kappa", condition_number(assemble_bv_matrix(Nodes1D(x))));
  return t;
}

ExperimentTable example4() {
  ExperimentTable t;
  t.example = 4;
  t.title = "Tensor grid 16 x 16, x_i = (i+1)/17, y_j = (j+1)/18";
  t.columns = {"full_lu", "newton_bernstein", "tensor_lu"};
  const auto grids = example4_grids();
  const auto axes = grid_axes(grids[0]);
  const auto full = transpose(assemble_tensor_bv_matrix(axes));
  std::vector<std::vector<Rational>> qaxes;
  for (const auto& a : axes) qaxes.push_back(to_rational(a.values()));
  for (std::size_t r = 0; r < grids.size(); ++r) {
    const auto exact = to_double(exact_solve_tensor(qaxes, to_rational(grids[r].data)));
    t.rows.push_back(label(r));
    t.errors.push_back({relative_error(exact, lu_solve(full, grids[r].data)),
                        relative_error(exact, tensor_product_2d(grids[r]).coeffs),
                        relative_error(exact, tensor_product_2d(grids[r], LineSolver::lu).coeffs)});
  }
  t.metrics.emplace_back("kappa", condition_number(transpose(full)));
  return t;
}

ExperimentTable example5() {
  ExperimentTable t;
  t.example = 5;
  t.title = "Tensor grid 11 x 11 x 11, x = (i+1)/12, y = (j+1)/13, z = (k+2)/14";
  t.columns = {"full_lu", "newton_bernstein", "tensor_lu"};
  const auto grids = example5_grids();
  const auto axes = grid_axes(grids[0]);
  const auto full = transpose(assemble_tensor_bv_matrix(axes));
  const auto values = axis_values(axes);
  for (std::size_t r = 0; r < grids.size(); ++r) {
    const auto ref = extended_solve_tensor(values, grids[r].data);
    t.rows.push_back(label(r));
    t.errors.push_back({relative_error(ref, lu_solve(full, grids[r].data)),
                        relative_error(ref, tensor_product_3d(grids[r]).coeffs),
                        relative_error(ref, tensor_product_3d(grids[r], LineSolver::lu).coeffs)});
  }
  // singular values of a Kronecker product are the products of the factors'
  t.metrics.emplace_back("kappa", kronecker_condition(axes));
  return t;
}

ExperimentTable example6() {
  ExperimentTable t;
  t.example = 6;
  t.title = "Unit triangle, n = 10, nodes on horizontal lines";
  t.columns = {"lu", "newton_bernstein"};
  const auto tri = example6_triangle();
  const auto parts = example6_partitions();
  const auto nodes = parts[0].all_nodes();
  const auto a = assemble_simplex_bv_matrix(parts[0].degree(), tri, nodes);
  const auto system = transpose(a);

  std::vector<RationalPoint> qtri;
  for (const auto& v : tri.vertices()) qtri.push_back({to_rational(v.x), to_rational(v.y)});
  std::vector<RationalPoint> qnodes;
  for (const auto& p : nodes) qnodes.push_back({to_rational(p.x), to_rational(p.y)});

  for (std::size_t r = 0; r < parts.size(); ++r) {
    const auto f = parts[r].all_data();
    const auto exact = to_double(exact_solve_simplex(parts[r].degree(), qtri, qnodes, to_rational(f)));
    t.rows.push_back(label(r));
    t.errors.push_back({relative_error(exact, lu_solve(system, f)),
                        relative_error(exact, newton_bernstein_2d(parts[r], tri).coeffs)});
  }
  t.metrics.emplace_back("kappa", condition_number(a));
  return t;
}

}  // namespace

std::vector<double> lcg_integers(std::uint32_t seed, std::size_t count, int lo, int hi) {
  Lcg g(seed);
  std::vector<double> v(count);
  for (auto& x : v) x = g.uniform_int(lo, hi);
  return v;
}

double ExperimentTable::error(std::string_view row, std::string_view column) const {
  const auto r = std::find(rows.begin(), rows.end(), row);
  const auto c = std::find(columns.begin(), columns.end(), column);
  if (r == rows.end() || c == columns.end())
    throw Error(ErrorCode::index_out_of_range, "no table entry " + std::string(row) + "/" + std::string(column));
  return errors[static_cast<std::size_t>(r - rows.begin())][static_cast<std::size_t>(c - columns.begin())];
}

double ExperimentTable::metric(std::string_view name) const {
  for (const auto& [k, v] : metrics)
    if (k == name) return v;
  throw Error(ErrorCode::index_out_of_range, "no metric " + std::string(name));
}

std::vector<double> ExperimentTable::column(std::string_view name) const {
  std::vector<double> out;
  for (const auto& r : rows) out.push_back(error(r, name));
  return out;
}

std::string to_csv(const ExperimentTable& table) {
  std::ostringstream os;
  os << "rhs";
  for (const auto& c : table.columns) os << ',' << c;
  os << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << table.rows[r];
    for (double e : table.errors[r]) os << ',' << format_full(e);
    os << '\n';
  }
  return os.str();
}

std::string to_text(const ExperimentTable& table) {
  std::ostringstream os;
  os << "Example " << table.example << ": " << table.title << "\n";
  os << "Relative errors in the 2-norm\n\n";
  std::size_t width = 12;
  for (const auto& c : table.columns) width = std::max(width, c.size() + 2);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-6s", "rhs");
  os << buf;
  for (const auto& c : table.columns) {
    std::snprintf(buf, sizeof buf, "%*s", static_cast<int>(width), c.c_str());
    os << buf;
  }
  os << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%-6s", table.rows[r].c_str());
    os << buf;
    for (double e : table.errors[r]) {
      std::snprintf(buf, sizeof buf, "%*s", static_cast<int>(width), format_sci(e).c_str());
      os << buf;
    }
    os << '\n';
  }
  if (!table.metrics.empty()) os << '\n';
  for (const auto& [k, v] : table.metrics) os << k << " = " << format_sci(v) << '\n';
  return os.str();
}

std::vector<double> example1_nodes() { return ratio_nodes(16, 1, 17); }

std::vector<std::vector<double>> example1_rhs() {
  const auto x = example1_nodes();
  std::vector<double> f1(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) f1[j] = std::pow(1.0 - x[j], 15);
  return {f1,
          {2, 1, 2, 3, -1, 0, 1, -2, 4, 1, 1, -3, 0, -1, -1, 2},
          {1, -2, 1, -1, 3, -1, 2, -1, 4, -1, 2, -1, 1, -3, 1, -4}};
}

std::vector<double> example2_nodes() {
  static constexpr int num[16] = {1, 1, 1, 1, 1, 1, 1, 1, 11, 19, 17, 15, 11, 9, 7, 5};
  static constexpr int den[16] = {18, 16, 14, 12, 10, 8, 6, 4, 20, 34, 30, 26, 18, 14, 10, 6};
  std::vector<double> x(16);
  for (std::size_t i = 0; i < 16; ++i) x[i] = double(num[i]) / double(den[i]);
  return x;
}

std::vector<std::vector<double>> example2_rhs() {
  const auto x = example2_nodes();
  const auto svd = jacobi_svd(transpose(assemble_bv_matrix(Nodes1D(x))));
  const std::size_t n = x.size();
  std::vector<std::vector<double>> rhs;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = svd.u(i, col);
    rhs.push_back(std::move(u));
  }
  return rhs;
}

std::vector<double> example3_nodes() {
  constexpr int m = 26;
  std::vector<double> x(m);
  for (int k = 0; k < m; ++k)
    x[static_cast<std::size_t>(k)] = (std::cos((2.0 * k + 1.0) * std::numbers::pi / (2.0 * m)) + 1.0) / 2.0;
  std::sort(x.begin(), x.end());
  return x;
}

std::vector<std::vector<double>> example3_rhs() {
  const auto x = example3_nodes();
  std::vector<double> f1(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) f1[j] = std::pow(1.0 - x[j], 25);
  return {f1,
          {-3, -1, 2, -1, 2, -1, 1, -3, 2, -3, 1, 2, -1, -2, 1, -2, -1, -2, 1, -2, 3, -2, -3, 2, 1, -2},
          {-1, 2, 1, -1, -2, -3, 2, 3, -2, -1, 2, 1, 3, -2, 1, -1, -1, 2, -2, -3, 1, -1, 1, -3, 2, -1}};
}

std::vector<TensorGrid2D> example4_grids() {
  const Nodes1D x(ratio_nodes(16, 1, 17));
  const Nodes1D y(ratio_nodes(16, 1, 18));
  std::vector<TensorGrid2D> grids;
  for (auto seed : kExample4Seeds) grids.push_back({x, y, lcg_integers(seed, 256)});
  return grids;
}

std::vector<TensorGrid3D> example5_grids() {
  const Nodes1D x(ratio_nodes(11, 1, 12));
  const Nodes1D y(ratio_nodes(11, 1, 13));
  const Nodes1D z(ratio_nodes(11, 2, 14));
  std::vector<TensorGrid3D> grids;
  for (auto seed : kExample5Seeds) grids.push_back({x, y, z, lcg_integers(seed, 1331)});
  return grids;
}

Triangle2 example6_triangle() { return Triangle2::unit(); }

std::vector<NodePartition> example6_partitions() {
  constexpr int n = 10;
  std::vector<NodePartition> parts;
  for (auto seed : kExample6Seeds) {
    Lcg g(seed);
    NodePartition p;
    int sign = 1;
    for (int j = n; j >= 0; --j) {
      const double y = double(n + 1 - j) / double(n + 2);
      NodeGroup group;
      for (int i = 0; i <= j; ++i) {
        group.nodes.push_back({(1.0 - y) * double(i + 1) / double(j + 2), y});
        group.data.push_back(sign * g.uniform_int(1, 3));
        sign = -sign;
      }
      p.groups.push_back(std::move(group));
    }
    parts.push_back(std::move(p));
  }
  return parts;
}

ExperimentTable run_example(int id) {
  switch (id) {
    case 1: return example1();
    case 2: return example2();
    case 3: return example3();
    case 4: return example4();
    case 5: return example5();
    case 6: return example6();
    default: throw Error(ErrorCode::validation, "example id must be 1..6");
  }
}

}  // namespace bbinterp
