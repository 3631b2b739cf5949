#include "bbinterp/newton_bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace bbinterp {

namespace {

constexpr double kDuplicateGap = 1e-14;

void check_distinct(std::span<const double> x) {
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] < kDuplicateGap) {
      throw Error(ErrorCode::singular_nodes, "duplicate interpolation nodes near " +
                                                 std::to_string(sorted[i]));
    }
  }
}

}  // namespace

Nodes1D::Nodes1D(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::validation, "empty node set");
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::node_out_of_range, "node " + std::to_string(v) + " outside [0,1]");
    }
  }
  check_distinct(values_);
}

Nodes1D Nodes1D::permuted(std::span<const std::size_t> perm) const {
  std::vector<double> v;
  v.reserve(perm.size());
  for (auto i : perm) v.push_back(values_.at(i));
  return Nodes1D(std::move(v));
}

VectorData::VectorData(std::size_t rows, std::size_t width, std::vector<double> values)
    : rows_(rows), width_(width), values_(std::move(values)) {
  if (values_.size() != rows_ * width_) {
    throw Error(ErrorCode::validation, "vector data has inconsistent entry lengths");
  }
}

VectorData divided_differences(const Nodes1D& nodes, const VectorData& data) {
  if (data.rows() != nodes.size()) {
    throw Error(ErrorCode::validation, "data count does not match node count");
  }
  const std::size_t n = nodes.size() - 1;
  const std::size_t w = data.width();
  VectorData f = data;
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t k = n; k >= s; --k) {
      const double h = nodes[k] - nodes[k - s];
      if (h == 0.0) throw Error(ErrorCode::singular_nodes, "duplicate interpolation nodes");
      for (std::size_t r = 0; r < w; ++r) f(k, r) = (f(k, r) - f(k - 1, r)) / h;
    }
  }
  return f;
}

void newton_bernstein_block(std::span<const double> x, const double* in, double* out,
                            std::size_t stride, std::size_t width, OpCounter* counter) {
  const std::size_t n = x.size() - 1;
  std::uint64_t flops = 0;

  std::vector<double> f((n + 1) * width);
  for (std::size_t i = 0; i <= n; ++i) {
    std::copy_n(in + i * stride, width, f.data() + i * width);
  }
  std::vector<double> c((n + 1) * width, 0.0);
  std::vector<double> w(n + 1, 0.0);
  auto fr = [&](std::size_t i) { return f.data() + i * width; };
  auto cr = [&](std::size_t i) { return c.data() + i * width; };

  std::copy_n(fr(0), width, cr(0));
  w[0] = 1.0;
  for (std::size_t s = 1; s <= n; ++s) {
    // divided differences of order s, in place
    for (std::size_t k = n; k >= s; --k) {
      const double h = x[k] - x[k - s];
      double* fk = fr(k);
      const double* fk1 = fr(k - 1);
      for (std::size_t r = 0; r < width; ++r) fk[r] = (fk[r] - fk1[r]) / h;
    }
    flops += (n - s + 1) * (1 + 2 * width);

    const double xs = x[s - 1];
    const double one_minus_xs = 1.0 - xs;
    const double* dd = fr(s);
    for (std::size_t k = s; k >= 1; --k) {
      const double t = static_cast<double>(k) / static_cast<double>(s);
      const double one_minus_t = 1.0 - t;
      w[k] = t * w[k - 1] * one_minus_xs - one_minus_t * w[k] * xs;
      double* ck = cr(k);
      const double* ck1 = cr(k - 1);
      const double wk = w[k];
      for (std::size_t r = 0; r < width; ++r) ck[r] = t * ck1[r] + one_minus_t * ck[r] + dd[r] * wk;
    }
    flops += s * (7 + 5 * width);
    w[0] = -w[0] * xs;
    double* c0 = cr(0);
    for (std::size_t r = 0; r < width; ++r) c0[r] += dd[r] * w[0];
    flops += 1 + 2 * width;
  }
  flops += 1;  // 1 - x_{s-1} hoisted per stage, counted once for the tail

  for (std::size_t i = 0; i <= n; ++i) std::copy_n(cr(i), width, out + i * stride);
  if (counter != nullptr) counter->flops += flops;
}

VectorData newton_bernstein(const Nodes1D& nodes, const VectorData& data, OpCounter* counter) {
  if (data.rows() != nodes.size()) {
    throw Error(ErrorCode::validation, "data count does not match node count");
  }
  VectorData out(data.rows(), data.width());
  if (data.width() == 0) return out;
  newton_bernstein_block(nodes.values(), data.flat().data(), out.storage().data(), data.width(),
                         data.width(), counter);
  return out;
}

ControlVector1D newton_bernstein(const Nodes1D& nodes, std::span<const double> data,
                                 OpCounter* counter) {
  const auto c = newton_bernstein(nodes, VectorData::scalars(data), counter);
  return {std::vector<double>(c.flat().begin(), c.flat().end())};
}

std::vector<std::size_t> leja_order(const Nodes1D& nodes) {
  const std::size_t count = nodes.size();
  std::vector<std::size_t> perm;
  perm.reserve(count);
  std::vector<bool> used(count, false);

  std::size_t first = 0;
  for (std::size_t j = 1; j < count; ++j) {
    if (std::abs(nodes[j]) > std::abs(nodes[first])) first = j;
  }
  perm.push_back(first);
  used[first] = true;

  // Products of distances are tracked as sums of logs to avoid underflow.
  constexpr double kTie = 1e-12;
  std::vector<double> log_prod(count, 0.0);
  for (std::size_t m = 1; m < count; ++m) {
    const double last = nodes[perm.back()];
    std::size_t best = count;
    for (std::size_t j = 0; j < count; ++j) {
      if (used[j]) continue;
      log_prod[j] += std::log(std::abs(nodes[j] - last));
      if (best == count || log_prod[j] > log_prod[best] + kTie) best = j;
    }
    perm.push_back(best);
    used[best] = true;
  }
  return perm;
}

std::vector<std::size_t> ascending_order(const Nodes1D& nodes) {
  std::vector<std::size_t> perm(nodes.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return nodes[a] < nodes[b]; });
  return perm;
}

ControlVector1D node_factor_bb(std::span<const double> nodes) {
  std::vector<double> a{1.0};
  for (std::size_t m = 0; m < nodes.size(); ++m) {
    const double z = nodes[m];
    const std::size_t k = a.size();  // degree after multiplying by (x - z)
    std::vector<double> next(k + 1, 0.0);
    for (std::size_t j = 0; j <= k; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(k);
      const double left = j > 0 ? a[j - 1] : 0.0;
      const double right = j < k ? a[j] : 0.0;
      next[j] = t * left * (1.0 - z) - (1.0 - t) * right * z;
    }
    a = std::move(next);
  }
  return {std::move(a)};
}

std::vector<double> barycentric_weights(const Nodes1D& nodes) {
  const std::size_t count = nodes.size();
  std::vector<double> mu(count);
  for (std::size_t j = 0; j < count; ++j) {
    double prod = 1.0;
    for (std::size_t k = 0; k < count; ++k) {
      if (k != j) prod *= nodes[j] - nodes[k];
    }
    if (prod == 0.0) throw Error(ErrorCode::singular_nodes, "duplicate interpolation nodes");
    mu[j] = 1.0 / prod;
  }
  return mu;
}

ControlVector1D closed_form_control_points(const Nodes1D& nodes, std::span<const double> data) {
  if (data.size() != nodes.size()) {
    throw Error(ErrorCode::validation, "data count does not match node count");
  }
  for (double z : nodes.values()) {
    if (z <= 0.0 || z >= 1.0) {
      throw Error(ErrorCode::singular_formula,
                  "closed form requires interior nodes; got " + std::to_string(z));
    }
  }
  const auto mu = barycentric_weights(nodes);

  std::vector<double> c(nodes.size(), 0.0);
  std::vector<double> others;
  others.reserve(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    // w~_k(x_j) are the control points of l(x) / (x - x_j)
    others.clear();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (i != j) others.push_back(nodes[i]);
    }
    const auto wtilde = node_factor_bb(others).coeffs;
    const double scale = mu[j] * data[j];
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += scale * wtilde[k];
  }
  return {std::move(c)};
}

}  // namespace bbinterp
