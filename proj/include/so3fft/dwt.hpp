#pragma once

#include <map>
#include <span>
#include <vector>

#include "so3fft/core.hpp"
#include "so3fft/fft.hpp"
#include "so3fft/quadrature.hpp"
#include "so3fft/schedule.hpp"
#include "so3fft/wigner.hpp"

namespace so3 {

/// T_B(m, m'): rows l = L..B-1 (L = max(|m|,|m'|)), columns j = 0..2B-1,
/// entries d(l, m, m'; beta_j). Row-major.
class WignerMatrix {
 public:
  WignerMatrix(OrderPair orders, Bandwidth b);

  OrderPair orders() const noexcept { return orders_; }
  Bandwidth bandwidth() const noexcept { return bandwidth_; }
  int first_degree() const noexcept { return first_degree_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  double at(int l, int j) const {
    return data_[static_cast<std::size_t>(l - first_degree_) * cols_ + static_cast<std::size_t>(j)];
  }

 private:
  OrderPair orders_;
  Bandwidth bandwidth_;
  int first_degree_;
  std::size_t rows_, cols_;
  std::vector<double> data_;
};

/// Column j is wigner_d_column(m, m', beta_j, B).
WignerMatrix build_wigner_matrix(int m, int mp, Bandwidth b);
WignerMatrix build_wigner_matrix(OrderPair p, const SampleAngles& angles, Bandwidth b);

/// Matrices of every cluster member, derived from the base matrix by row signs
/// and (for reflecting relations) column reversal.
std::map<OrderPair, WignerMatrix> derive_cluster_matrices(const WignerMatrix& base,
                                                          const SymmetryCluster& cluster);

/// Diagonals of V_B(m, m') and W_B.
struct DwtScalers {
  DwtScalers(int first_degree, const QuadratureWeights& weights);

  std::vector<double> v;  // (2l+1)/(8 pi B), l = first_degree..B-1
  std::vector<double> w;
};

/// out[l-L] = v[l-L] * sum_j T[l][j] w[j] s[j]
std::vector<Complex> dwt_apply(const WignerMatrix& t, const DwtScalers& s,
                               std::span<const Complex> slice_values);

/// out[j] = sum_l T[l][j] coeffs[l-L], accumulated row by row.
std::vector<Complex> idwt_apply(const WignerMatrix& t, std::span<const Complex> coeffs);

/// Reusable per-thread buffers for the cluster kernels.
struct ClusterWorkspace {
  std::vector<double> re, im;  // 8 members x 2B
};

/// Forward DWT for every member of a cluster using only the base matrix.
/// `v_all` holds (2l+1)/(8 pi B) for l = 0..B-1.
void forward_cluster(const SymmetryCluster& cluster, const WignerMatrix& base,
                     std::span<const double> weights, std::span<const double> v_all,
                     const Spectrum& spectra, So3Coefficients& out, ClusterWorkspace& ws);

/// Inverse DWT for every member of a cluster; writes g(m, m'; j) into `out`.
void inverse_cluster(const SymmetryCluster& cluster, const WignerMatrix& base,
                     const So3Coefficients& coeffs, Spectrum& out, ClusterWorkspace& ws);

}  // namespace so3
