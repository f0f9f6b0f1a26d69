#pragma once

#include <optional>
#include <vector>

#include "so3fft/core.hpp"
#include "so3fft/dwt.hpp"
#include "so3fft/quadrature.hpp"
#include "so3fft/schedule.hpp"

namespace so3 {

enum class MatrixCache {
  streaming,    // build each base matrix inside its work item, then drop it
  precomputed,  // build every base matrix once, at plan construction
};

/// Everything a transform of bandwidth B needs besides the data.
class TransformPlan {
 public:
  explicit TransformPlan(Bandwidth b, Partitioner partitioner = Partitioner::kappa,
                         MatrixCache cache = MatrixCache::streaming, int oracle_cap = 12);

  Bandwidth bandwidth() const noexcept { return bandwidth_; }
  const SampleAngles& angles() const noexcept { return angles_; }
  const QuadratureWeights& weights() const noexcept { return weights_; }
  const std::vector<SymmetryCluster>& clusters() const noexcept { return clusters_; }
  MatrixCache cache() const noexcept { return cache_; }
  int oracle_cap() const noexcept { return oracle_cap_; }
  /// (2l+1)/(8 pi B) for l = 0..B-1.
  const std::vector<double>& degree_scale() const noexcept { return degree_scale_; }

  /// Base matrix of cluster `index`; from the cache, or freshly built when streaming.
  WignerMatrix base_matrix(std::size_t index) const;
  const WignerMatrix* cached_matrix(std::size_t index) const;

 private:
  Bandwidth bandwidth_;
  SampleAngles angles_;
  QuadratureWeights weights_;
  std::vector<double> degree_scale_;
  std::vector<SymmetryCluster> clusters_;
  MatrixCache cache_;
  int oracle_cap_;
  std::vector<WignerMatrix> matrices_;
};

// Fast transforms. The sequential versions are the single-threaded reference;
// the parallel versions run the same kernels through run_items and return
// bit-identical results for any thread count.
So3Coefficients fsoft_sequential(const So3SampleGrid& samples, const TransformPlan& plan);
So3SampleGrid ifsoft_sequential(const So3Coefficients& coeffs, const TransformPlan& plan);
So3Coefficients fsoft_parallel(const So3SampleGrid& samples, const TransformPlan& plan,
                               int threads);
So3SampleGrid ifsoft_parallel(const So3Coefficients& coeffs, const TransformPlan& plan,
                              int threads);

// Direct evaluation of the quadrature triple sum / the Fourier series at every
// grid point, with Wigner-d values from the closed form. O(B^6); capped at
// plan.oracle_cap().
So3Coefficients fsoft_direct(const So3SampleGrid& samples, const TransformPlan& plan);
So3SampleGrid ifsoft_direct(const So3Coefficients& coeffs, const TransformPlan& plan);

}  // namespace so3
