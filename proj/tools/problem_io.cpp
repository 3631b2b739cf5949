#include "problem_io.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "bbinterp/reference_linalg.hpp"
#include "bbinterp/tensor_product.hpp"

namespace bbinterp::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxExactUnknowns = 400;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::validation, msg); }

struct Number {
  double value;
  Rational exact;
};

Number read_number(const json& j, std::string_view what) {
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    return {static_cast<double>(v), Rational(std::to_string(v))};
  }
  if (j.is_number()) {
    const double v = j.get<double>();
    return {v, to_rational(v)};
  }
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    return {to_double(q), std::move(q)};
  }
  invalid("expected a number in " + std::string(what));
}

const json& member(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) invalid(std::string("missing field '") + key + "'");
  return *it;
}

const json& array_member(const json& j, const char* key) {
  const json& a = member(j, key);
  if (!a.is_array()) invalid(std::string("field '") + key + "' must be an array");
  return a;
}

void read_numbers(const json& a, std::string_view what, std::vector<double>& out, std::vector<Rational>& exact) {
  if (!a.is_array()) invalid(std::string(what) + " must be an array");
  for (const auto& e : a) {
    auto n = read_number(e, what);
    out.push_back(n.value);
    exact.push_back(std::move(n.exact));
  }
}

void read_point(const json& a, Point2& p, RationalPoint& q) {
  if (!a.is_array() || a.size() != 2) invalid("points must be [x, y] pairs");
  auto x = read_number(a[0], "point");
  auto y = read_number(a[1], "point");
  p = {x.value, y.value};
  q = {std::move(x.exact), std::move(y.exact)};
}

Triangle2 make_triangle(const std::array<Point2, 3>& v) { return {v[0], v[1], v[2]}; }

std::size_t product_of_sizes(const std::vector<std::vector<double>>& axes) {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size();
  return n;
}

std::vector<std::size_t> order_permutation(const Nodes1D& x, Ordering o) {
  switch (o) {
    case Ordering::ascending: return ascending_order(x);
    case Ordering::leja: return leja_order(x);
    case Ordering::given: break;
  }
  std::vector<std::size_t> id(x.size());
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// Reorders every axis of a tensor problem and the data with it.
void permute_tensor(std::vector<Nodes1D>& axes, std::vector<double>& data, Ordering o) {
  const std::size_t d = axes.size();
  std::vector<std::vector<std::size_t>> perms;
  for (auto& a : axes) {
    perms.push_back(order_permutation(a, o));
    a = a.permuted(perms.back());
  }
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t k = d - 1; k > 0; --k) stride[k - 1] = stride[k] * axes[k].size();
  std::vector<double> out(data.size());
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    std::size_t rest = flat;
    std::size_t src = 0;
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t i = rest / stride[k];
      rest %= stride[k];
      src += perms[k][i] * stride[k];
    }
    out[flat] = data[src];
  }
  data = std::move(out);
}

NodePartition build_partition(const Problem& p) {
  if (p.group_sizes.empty()) return detect_partition(p.nodes, p.data);
  NodePartition part;
  std::size_t at = 0;
  for (int size : p.group_sizes) {
    NodeGroup g;
    for (int i = 0; i < size; ++i, ++at) {
      g.nodes.push_back(p.nodes[at]);
      g.data.push_back(p.data[at]);
    }
    part.groups.push_back(std::move(g));
  }
  return part;
}

// Reorders the nodes of each group along its line.
void order_groups(NodePartition& part, const Triangle2& t, Ordering o) {
  if (o == Ordering::given) return;
  for (auto& g : part.groups) {
    if (g.nodes.size() < 2) continue;
    const auto seg = line_chord(bb_affine(g.nodes, t), t);
    const auto perm = order_permutation(Nodes1D(transform_1d(g.nodes, seg)), o);
    NodeGroup h;
    for (auto i : perm) {
      h.nodes.push_back(g.nodes[i]);
      h.data.push_back(g.data[i]);
    }
    g = std::move(h);
  }
}

void check_dense_budget(std::size_t unknowns) {
  if (unknowns > kMaxDenseUnknowns)
    throw Error(ErrorCode::resource, "dense system with " + std::to_string(unknowns) +
                                         " unknowns exceeds the limit of " +
                                         std::to_string(kMaxDenseUnknowns));
}

std::vector<std::string> exact_strings(std::span<const Rational> q) {
  std::vector<std::string> out;
  out.reserve(q.size());
  for (const auto& v : q) out.push_back(to_string(v));
  return out;
}

void write_array(std::ostringstream& os, std::span<const double> v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_double(v[i]);
  os << ']';
}

std::size_t expected_coefficients(const Solution& s) {
  if (s.kind == ProblemKind::simplex2d) return simplex_basis_size(2, s.degrees.at(0));
  std::size_t n = 1;
  for (int d : s.degrees) n *= static_cast<std::size_t>(d + 1);
  return n;
}

}  // namespace

std::string_view name_of(ProblemKind k) {
  switch (k) {
    case ProblemKind::univariate: return "univariate";
    case ProblemKind::tensor2d: return "tensor2d";
    case ProblemKind::tensor3d: return "tensor3d";
    case ProblemKind::simplex2d: return "simplex2d";
  }
  return "?";
}

std::string_view name_of(Ordering o) {
  switch (o) {
    case Ordering::given: return "given";
    case Ordering::ascending: return "ascending";
    case Ordering::leja: return "leja";
  }
  return "?";
}

std::string_view name_of(SolverKind s) {
  switch (s) {
    case SolverKind::newton_bernstein: return "newton-bernstein";
    case SolverKind::lu: return "lu";
    case SolverKind::exact: return "exact";
  }
  return "?";
}

ProblemKind parse_kind(std::string_view s) {
  for (auto k : {ProblemKind::univariate, ProblemKind::tensor2d, ProblemKind::tensor3d, ProblemKind::simplex2d})
    if (name_of(k) == s) return k;
  invalid("unknown kind '" + std::string(s) + "'");
}

Ordering parse_ordering(std::string_view s) {
  for (auto o : {Ordering::given, Ordering::ascending, Ordering::leja})
    if (name_of(o) == s) return o;
  invalid("unknown ordering '" + std::string(s) + "'");
}

SolverKind parse_solver(std::string_view s) {
  for (auto k : {SolverKind::newton_bernstein, SolverKind::lu, SolverKind::exact})
    if (name_of(k) == s) return k;
  invalid("unknown solver '" + std::string(s) + "'");
}

std::size_t Problem::unknowns() const {
  if (kind == ProblemKind::simplex2d) return nodes.size();
  return product_of_sizes(axes);
}

int Problem::simplex_degree() const {
  const std::size_t m = nodes.size();
  for (int n = 0; simplex_basis_size(2, n) <= m; ++n)
    if (simplex_basis_size(2, n) == m) return n;
  invalid("simplex2d needs (n+1)(n+2)/2 nodes, got " + std::to_string(m));
}

Problem parse_problem(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
  if (!j.is_object()) invalid("problem must be a JSON object");

  Problem p;
  try {
    p.kind = parse_kind(member(j, "kind").get<std::string>());
    if (j.contains("ordering")) p.ordering = parse_ordering(j["ordering"].get<std::string>());

    if (p.kind == ProblemKind::simplex2d) {
      const json& tri = array_member(j, "triangle");
      if (tri.size() != 3) invalid("triangle needs three vertices");
      for (std::size_t k = 0; k < 3; ++k) read_point(tri[k], p.triangle[k], p.exact_triangle[k]);

      auto add_nodes = [&](const json& pts, const json& vals) {
        if (!pts.is_array() || pts.size() != vals.size()) invalid("nodes and data differ in length");
        for (const auto& e : pts) {
          Point2 q;
          RationalPoint r;
          read_point(e, q, r);
          p.nodes.push_back(q);
          p.exact_nodes.push_back(std::move(r));
        }
        read_numbers(vals, "data", p.data, p.exact_data);
      };

      if (j.contains("groups")) {
        for (const auto& g : array_member(j, "groups")) {
          add_nodes(array_member(g, "nodes"), array_member(g, "data"));
          p.group_sizes.push_back(static_cast<int>(g["nodes"].size()));
        }
      } else {
        if (!j.contains("partition") || j["partition"] != "auto")
          invalid("simplex2d needs 'groups' or \"partition\": \"auto\"");
        add_nodes(array_member(j, "nodes"), array_member(j, "data"));
      }
      if (p.nodes.empty()) invalid("simplex2d problem has no nodes");
      (void)p.simplex_degree();
      return p;
    }

    if (p.kind == ProblemKind::univariate) {
      p.axes.emplace_back();
      p.exact_axes.emplace_back();
      read_numbers(array_member(j, "nodes"), "nodes", p.axes[0], p.exact_axes[0]);
    } else {
      const json& axes = array_member(j, "axes");
      const std::size_t d = p.kind == ProblemKind::tensor2d ? 2 : 3;
      if (axes.size() != d) invalid(std::string(name_of(p.kind)) + " needs " + std::to_string(d) + " axes");
      for (const auto& a : axes) {
        p.axes.emplace_back();
        p.exact_axes.emplace_back();
        read_numbers(a, "axes", p.axes.back(), p.exact_axes.back());
      }
    }
    read_numbers(array_member(j, "data"), "data", p.data, p.exact_data);
    for (const auto& a : p.axes)
      if (a.empty()) invalid("empty node set");
    if (p.data.size() != product_of_sizes(p.axes))
      invalid("data has " + std::to_string(p.data.size()) + " entries, expected " +
              std::to_string(product_of_sizes(p.axes)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::validation, e.what());
  }
  return p;
}

Solution solve(const Problem& p, SolverKind solver, std::optional<Ordering> ordering) {
  const auto start = std::chrono::steady_clock::now();
  Solution s;
  s.kind = p.kind;
  s.solver = solver;
  s.ordering = ordering.value_or(p.ordering);

  if (p.kind == ProblemKind::simplex2d) {
    const int n = p.simplex_degree();
    s.degrees = {n};
    s.triangle = p.triangle;
    const Triangle2 tri = make_triangle(p.triangle);
    switch (solver) {
      case SolverKind::newton_bernstein: {
        NodePartition part = build_partition(p);
        order_groups(part, tri, s.ordering);
        s.coeffs = newton_bernstein_2d(part, tri).coeffs;
        break;
      }
      case SolverKind::lu:
        check_dense_budget(p.unknowns());
        s.coeffs = lu_solve(transpose(assemble_matrix(p)), p.data);
        break;
      case SolverKind::exact: {
        if (p.unknowns() > kMaxExactUnknowns)
          throw Error(ErrorCode::resource, "exact simplex solve limited to " +
                                               std::to_string(kMaxExactUnknowns) + " unknowns");
        const auto q = exact_solve_simplex(n, p.exact_triangle, p.exact_nodes, p.exact_data);
        s.coeffs = to_double(q);
        s.exact_coeffs = exact_strings(q);
        break;
      }
    }
  } else {
    std::vector<Nodes1D> axes;
    for (const auto& a : p.axes) {
      axes.emplace_back(a);
      s.degrees.push_back(axes.back().degree());
    }
    switch (solver) {
      case SolverKind::newton_bernstein: {
        std::vector<double> values = p.data;
        permute_tensor(axes, values, s.ordering);
        if (axes.size() == 1) {
          s.coeffs = newton_bernstein(axes[0], values).coeffs;
        } else {
          std::vector<std::size_t> order(axes.size());
          std::iota(order.begin(), order.end(), 0);
          detail::tensor_sweep(axes, values, order, LineSolver::newton_bernstein, true);
          s.coeffs = std::move(values);
        }
        break;
      }
      case SolverKind::lu:
        check_dense_budget(p.unknowns());
        s.coeffs = lu_solve(transpose(assemble_matrix(p)), p.data);
        break;
      case SolverKind::exact: {
        if (axes.size() == 1 && p.unknowns() > kMaxExactUnknowns)
          throw Error(ErrorCode::resource, "exact solve limited to " + std::to_string(kMaxExactUnknowns) +
                                               " unknowns per axis");
        for (const auto& a : axes)
          if (a.size() > kMaxExactUnknowns)
            throw Error(ErrorCode::resource, "exact solve limited to " + std::to_string(kMaxExactUnknowns) +
                                                 " unknowns per axis");
        const auto q = axes.size() == 1 ? exact_solve_1d(p.exact_axes[0], p.exact_data)
                                        : exact_solve_tensor(p.exact_axes, p.exact_data);
        s.coeffs = to_double(q);
        s.exact_coeffs = exact_strings(q);
        break;
      }
    }
  }

  for (double c : s.coeffs)
    if (!std::isfinite(c)) throw Error(ErrorCode::numerical, "solver produced a non-finite coefficient");
  s.residual_max = residual_max(s, p);
  s.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

double residual_max(const Solution& s, const Problem& p) {
  double worst = 0.0;
  if (p.kind == ProblemKind::simplex2d) {
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
      const double v = evaluate(s, std::array{p.nodes[i].x, p.nodes[i].y});
      worst = std::max(worst, std::abs(v - p.data[i]));
    }
    return worst;
  }
  const std::size_t d = p.axes.size();
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> point(d);
  for (std::size_t flat = 0; flat < p.data.size(); ++flat) {
    for (std::size_t k = 0; k < d; ++k) point[k] = p.axes[k][idx[k]];
    worst = std::max(worst, std::abs(evaluate(s, point) - p.data[flat]));
    for (std::size_t k = d; k-- > 0;) {
      if (++idx[k] < p.axes[k].size()) break;
      idx[k] = 0;
    }
  }
  return worst;
}

std::size_t point_dimension(ProblemKind k) {
  switch (k) {
    case ProblemKind::univariate: return 1;
    case ProblemKind::tensor2d: return 2;
    case ProblemKind::tensor3d: return 3;
    case ProblemKind::simplex2d: return 2;
  }
  return 0;
}

double evaluate(const Solution& s, std::span<const double> point) {
  if (point.size() != point_dimension(s.kind))
    invalid("point has " + std::to_string(point.size()) + " coordinates, expected " +
            std::to_string(point_dimension(s.kind)));
  switch (s.kind) {
    case ProblemKind::univariate: return de_casteljau_1d(s.coeffs, point[0]);
    case ProblemKind::simplex2d: {
      const SimplexCoefficients c{2, s.degrees.at(0), s.coeffs};
      return simplex_eval(c, make_triangle(s.triangle), {point[0], point[1]});
    }
    default: return tensor_eval(TensorCoefficients{s.degrees, s.coeffs}, point);
  }
}

std::string format_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::numerical, "non-finite value cannot be serialised");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string write_solution(const Solution& s) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"kind\": \"" << name_of(s.kind) << "\",\n";
  os << "  \"solver\": \"" << name_of(s.solver) << "\",\n";
  os << "  \"ordering\": \"" << name_of(s.ordering) << "\",\n";
  os << "  \"degrees\": [";
  for (std::size_t i = 0; i < s.degrees.size(); ++i) os << (i ? ", " : "") << s.degrees[i];
  os << "],\n";
  if (s.kind == ProblemKind::simplex2d) {
    os << "  \"triangle\": [";
    for (std::size_t k = 0; k < 3; ++k)
      os << (k ? ", " : "") << '[' << format_double(s.triangle[k].x) << ", " << format_double(s.triangle[k].y)
         << ']';
    os << "],\n";
  }
  os << "  \"coefficients\": ";
  write_array(os, s.coeffs);
  os << ",\n";
  if (!s.exact_coeffs.empty()) {
    os << "  \"exact_coefficients\": [";
    for (std::size_t i = 0; i < s.exact_coeffs.size(); ++i) os << (i ? ", " : "") << '"' << s.exact_coeffs[i] << '"';
    os << "],\n";
  }
  os << "  \"residual_max\": " << format_double(s.residual_max) << ",\n";
  os << "  \"elapsed_seconds\": " << format_double(s.elapsed_seconds) << "\n";
  os << "}\n";
  return os.str();
}

Solution parse_solution(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::parse, e.what());
  }
  if (!j.is_object()) invalid("solution must be a JSON object");
  Solution s;
  try {
    s.kind = parse_kind(member(j, "kind").get<std::string>());
    if (j.contains("solver")) s.solver = parse_solver(j["solver"].get<std::string>());
    if (j.contains("ordering")) s.ordering = parse_ordering(j["ordering"].get<std::string>());
    s.degrees = member(j, "degrees").get<std::vector<int>>();
    const std::size_t want_axes = s.kind == ProblemKind::tensor2d ? 2 : s.kind == ProblemKind::tensor3d ? 3 : 1;
    if (s.degrees.size() != want_axes) invalid("degrees has the wrong length");
    for (int d : s.degrees)
      if (d < 0) invalid("negative degree");
    if (s.kind == ProblemKind::simplex2d) {
      const json& tri = array_member(j, "triangle");
      if (tri.size() != 3) invalid("triangle needs three vertices");
      for (std::size_t k = 0; k < 3; ++k) {
        RationalPoint unused;
        read_point(tri[k], s.triangle[k], unused);
      }
      (void)make_triangle(s.triangle);
    }
    s.coeffs = array_member(j, "coefficients").get<std::vector<double>>();
    if (s.coeffs.size() != expected_coefficients(s))
      invalid("expected " + std::to_string(expected_coefficients(s)) + " coefficients, got " +
              std::to_string(s.coeffs.size()));
    if (j.contains("exact_coefficients")) s.exact_coeffs = j["exact_coefficients"].get<std::vector<std::string>>();
    if (j.contains("residual_max")) s.residual_max = j["residual_max"].get<double>();
    if (j.contains("elapsed_seconds")) s.elapsed_seconds = j["elapsed_seconds"].get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::validation, e.what());
  }
  return s;
}

std::vector<std::vector<double>> parse_points_csv(std::string_view text, std::size_t dim) {
  std::vector<std::vector<double>> points;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<double> p;
    while (true) {
      const auto comma = line.find(',');
      std::string_view field = line.substr(0, comma);
      while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty())
        throw Error(ErrorCode::parse, "line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
      p.push_back(v);
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (p.size() != dim)
      invalid("line " + std::to_string(line_no) + ": expected " + std::to_string(dim) + " coordinates, got " +
              std::to_string(p.size()));
    points.push_back(std::move(p));
  }
  return points;
}

DenseMatrix assemble_matrix(const Problem& p) {
  check_dense_budget(p.unknowns());
  if (p.kind == ProblemKind::simplex2d)
    return assemble_simplex_bv_matrix(p.simplex_degree(), make_triangle(p.triangle), p.nodes);
  std::vector<Nodes1D> axes;
  for (const auto& a : p.axes) axes.emplace_back(a);
  if (axes.size() == 1) return assemble_bv_matrix(axes[0]);
  return assemble_tensor_bv_matrix(axes);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::resource, "cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw Error(ErrorCode::resource, "write to '" + tmp.string() + "' failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw Error(ErrorCode::resource, "cannot move output into '" + path + "': " + ec.message());
  }
}

}  // namespace bbinterp::cli
