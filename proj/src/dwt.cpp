#include "so3fft/dwt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace so3 {

WignerMatrix::WignerMatrix(OrderPair orders, Bandwidth b)
    : orders_(orders),
      bandwidth_(b),
      first_degree_(min_degree(orders)),
      rows_(first_degree_ < b.value() ? static_cast<std::size_t>(b.value() - first_degree_) : 0),
      cols_(static_cast<std::size_t>(b.grid_side())),
      data_(rows_ * cols_) {
  if (rows_ == 0) throw std::domain_error("WignerMatrix: orders exceed bandwidth");
}

WignerMatrix build_wigner_matrix(OrderPair p, const SampleAngles& angles, Bandwidth b) {
  WignerMatrix t(p, b);
  const RecurrenceCoefficients rc(p, b);
  const std::size_t n = t.cols();
  std::vector<double> cb(n);
  auto seed = t.row(0);
  for (std::size_t j = 0; j < n; ++j) {
    cb[j] = std::cos(angles.betas[j]);
    seed[j] = wigner_d_seed(p.m, p.mp, angles.betas[j]);
  }
  // Same update as wigner_d_column, one degree at a time across all columns.
  for (std::size_t i = 0; i < rc.a.size(); ++i) {
    const double a = rc.a[i], bb = rc.b[i], c = rc.c[i];
    const auto cur = t.row(i);
    const auto next = t.row(i + 1);
    if (i == 0) {
      for (std::size_t j = 0; j < n; ++j) next[j] = a * (cb[j] - c) * cur[j];
    } else {
      const auto prev = t.row(i - 1);
      for (std::size_t j = 0; j < n; ++j) next[j] = a * (cb[j] - c) * cur[j] - bb * prev[j];
    }
  }
  return t;
}

WignerMatrix build_wigner_matrix(int m, int mp, Bandwidth b) {
  return build_wigner_matrix(OrderPair{m, mp}, sample_angles(b), b);
}

std::map<OrderPair, WignerMatrix> derive_cluster_matrices(const WignerMatrix& base,
                                                          const SymmetryCluster& cluster) {
  if (!(base.orders() == cluster.base))
    throw std::invalid_argument("derive_cluster_matrices: base matrix does not match cluster");
  std::map<OrderPair, WignerMatrix> out;
  const std::size_t n = base.cols();
  for (const auto& member : cluster.members) {
    WignerMatrix t(member.orders, base.bandwidth());
    const bool rev = reflects(member.relation);
    for (std::size_t r = 0; r < base.rows(); ++r) {
      const double s = sign(member.relation, base.first_degree() + static_cast<int>(r),
                            cluster.base);
      const auto src = base.row(r);
      const auto dst = t.row(r);
      for (std::size_t j = 0; j < n; ++j) dst[j] = s * src[rev ? n - 1 - j : j];
    }
    out.emplace(member.orders, std::move(t));
  }
  return out;
}

DwtScalers::DwtScalers(int first_degree, const QuadratureWeights& weights) : w(weights.w) {
  const int b = weights.bandwidth.value();
  if (first_degree < 0 || first_degree >= b)
    throw std::domain_error("DwtScalers: first degree outside bandwidth");
  v.resize(static_cast<std::size_t>(b - first_degree));
  for (int l = first_degree; l < b; ++l)
    v[l - first_degree] = (2.0 * l + 1.0) / (8.0 * std::numbers::pi * b);
}

std::vector<Complex> dwt_apply(const WignerMatrix& t, const DwtScalers& s,
                               std::span<const Complex> slice_values) {
  if (slice_values.size() != t.cols() || s.w.size() != t.cols() || s.v.size() != t.rows())
    throw std::invalid_argument("dwt_apply: dimension mismatch");
  std::vector<Complex> weighted(t.cols());
  for (std::size_t j = 0; j < t.cols(); ++j) weighted[j] = s.w[j] * slice_values[j];
  std::vector<Complex> out(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const auto row = t.row(r);
    Complex acc{};
    for (std::size_t j = 0; j < t.cols(); ++j) acc += row[j] * weighted[j];
    out[r] = s.v[r] * acc;
  }
  return out;
}

std::vector<Complex> idwt_apply(const WignerMatrix& t, std::span<const Complex> coeffs) {
  if (coeffs.size() != t.rows()) throw std::invalid_argument("idwt_apply: dimension mismatch");
  std::vector<Complex> out(t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const auto row = t.row(r);
    const Complex c = coeffs[r];
    for (std::size_t j = 0; j < t.cols(); ++j) out[j] += row[j] * c;
  }
  return out;
}

namespace {

// Four partial sums; the order is fixed so every caller gets the same bits.
inline double dot(const double* a, const double* b, std::size_t n) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    s0 += a[j] * b[j];
    s1 += a[j + 1] * b[j + 1];
    s2 += a[j + 2] * b[j + 2];
    s3 += a[j + 3] * b[j + 3];
  }
  for (; j < n; ++j) s0 += a[j] * b[j];
  return (s0 + s1) + (s2 + s3);
}

}  // namespace

void forward_cluster(const SymmetryCluster& cluster, const WignerMatrix& base,
                     std::span<const double> weights, std::span<const double> v_all,
                     const Spectrum& spectra, So3Coefficients& out, ClusterWorkspace& ws) {
  const std::size_t n = base.cols();
  const std::size_t members = cluster.members.size();
  ws.re.resize(members * n);
  ws.im.resize(members * n);

  // Weighted input per member, reversed in j for reflecting relations.
  for (std::size_t k = 0; k < members; ++k) {
    const auto& mem = cluster.members[k];
    const bool rev = reflects(mem.relation);
    double* re = ws.re.data() + k * n;
    double* im = ws.im.data() + k * n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t src = rev ? n - 1 - j : j;
      const Complex s = weights[src] * spectra.at(static_cast<int>(src), mem.orders.m, mem.orders.mp);
      re[j] = s.real();
      im[j] = s.imag();
    }
  }

  const int first = base.first_degree();
  for (std::size_t r = 0; r < base.rows(); ++r) {
    const int l = first + static_cast<int>(r);
    const double* row = base.row(r).data();
    for (std::size_t k = 0; k < members; ++k) {
      const auto& mem = cluster.members[k];
      const double scale = v_all[l] * sign(mem.relation, l, cluster.base);
      const double re = dot(row, ws.re.data() + k * n, n);
      const double im = dot(row, ws.im.data() + k * n, n);
      out.data[coeff_index_unchecked(l, mem.orders.m, mem.orders.mp)] = {scale * re, scale * im};
    }
  }
}

void inverse_cluster(const SymmetryCluster& cluster, const WignerMatrix& base,
                     const So3Coefficients& coeffs, Spectrum& out, ClusterWorkspace& ws) {
  const std::size_t n = base.cols();
  const std::size_t members = cluster.members.size();
  ws.re.assign(members * n, 0.0);
  ws.im.assign(members * n, 0.0);

  const int first = base.first_degree();
  for (std::size_t r = 0; r < base.rows(); ++r) {
    const int l = first + static_cast<int>(r);
    const double* row = base.row(r).data();
    for (std::size_t k = 0; k < members; ++k) {
      const auto& mem = cluster.members[k];
      const Complex c = static_cast<double>(sign(mem.relation, l, cluster.base)) *
                        coeffs.data[coeff_index_unchecked(l, mem.orders.m, mem.orders.mp)];
      const double cr = c.real(), ci = c.imag();
      double* re = ws.re.data() + k * n;
      double* im = ws.im.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        re[j] += row[j] * cr;
        im[j] += row[j] * ci;
      }
    }
  }

  for (std::size_t k = 0; k < members; ++k) {
    const auto& mem = cluster.members[k];
    const bool rev = reflects(mem.relation);
    const double* re = ws.re.data() + k * n;
    const double* im = ws.im.data() + k * n;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t src = rev ? n - 1 - j : j;
      out.at(static_cast<int>(j), mem.orders.m, mem.orders.mp) = {re[src], im[src]};
    }
  }
}

}  // namespace so3
