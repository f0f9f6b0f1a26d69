#include "so3fft/soft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "so3fft/fft.hpp"
#include "so3fft/wigner.hpp"

namespace so3 {

TransformPlan::TransformPlan(Bandwidth b, Partitioner partitioner, MatrixCache cache,
                             int oracle_cap)
    : bandwidth_(b),
      angles_(sample_angles(b)),
      weights_(quadrature_weights(b)),
      clusters_(enumerate_clusters(b, partitioner)),
      cache_(cache),
      oracle_cap_(oracle_cap) {
  degree_scale_.resize(static_cast<std::size_t>(b.value()));
  for (int l = 0; l < b.value(); ++l)
    degree_scale_[l] = (2.0 * l + 1.0) / (8.0 * std::numbers::pi * b.value());
  if (cache_ == MatrixCache::precomputed) {
    matrices_.reserve(clusters_.size());
    for (const auto& c : clusters_) matrices_.push_back(build_wigner_matrix(c.base, angles_, b));
  }
}

WignerMatrix TransformPlan::base_matrix(std::size_t index) const {
  if (const auto* m = cached_matrix(index)) return *m;
  return build_wigner_matrix(clusters_.at(index).base, angles_, bandwidth_);
}

const WignerMatrix* TransformPlan::cached_matrix(std::size_t index) const {
  return cache_ == MatrixCache::precomputed ? &matrices_.at(index) : nullptr;
}

namespace {

void require_bandwidth(Bandwidth got, const TransformPlan& plan, const char* what) {
  if (!(got == plan.bandwidth()))
    throw std::invalid_argument(std::string(what) + ": bandwidth " + std::to_string(got.value()) +
                                " does not match plan bandwidth " +
                                std::to_string(plan.bandwidth().value()));
}

void require_oracle_cap(const TransformPlan& plan, const char* what) {
  if (plan.bandwidth().value() > plan.oracle_cap())
    throw std::domain_error(std::string(what) + ": bandwidth " +
                            std::to_string(plan.bandwidth().value()) + " exceeds oracle cap " +
                            std::to_string(plan.oracle_cap()));
}

template <class Kernel>
void for_each_cluster(const TransformPlan& plan, int threads, Kernel&& kernel) {
  run_items(
      plan.clusters().size(),
      [&](std::size_t idx) {
        thread_local ClusterWorkspace ws;
        if (const auto* cached = plan.cached_matrix(idx)) {
          kernel(plan.clusters()[idx], *cached, ws);
        } else {
          const auto base = build_wigner_matrix(plan.clusters()[idx].base, plan.angles(),
                                                plan.bandwidth());
          kernel(plan.clusters()[idx], base, ws);
        }
      },
      threads);
}

So3Coefficients forward(const So3SampleGrid& samples, const TransformPlan& plan, int threads) {
  require_bandwidth(samples.bandwidth, plan, "fsoft");
  const Spectrum spectra = forward_stage(samples, threads);
  So3Coefficients out(plan.bandwidth());
  for_each_cluster(plan, threads,
                   [&](const SymmetryCluster& c, const WignerMatrix& base, ClusterWorkspace& ws) {
                     forward_cluster(c, base, plan.weights().w, plan.degree_scale(), spectra, out,
                                     ws);
                   });
  return out;
}

So3SampleGrid inverse(const So3Coefficients& coeffs, const TransformPlan& plan, int threads) {
  require_bandwidth(coeffs.bandwidth, plan, "ifsoft");
  Spectrum spectra(plan.bandwidth());
  for_each_cluster(plan, threads,
                   [&](const SymmetryCluster& c, const WignerMatrix& base, ClusterWorkspace& ws) {
                     inverse_cluster(c, base, coeffs, spectra, ws);
                   });
  return inverse_stage(spectra, threads);
}

}  // namespace

So3Coefficients fsoft_sequential(const So3SampleGrid& samples, const TransformPlan& plan) {
  return forward(samples, plan, 1);
}

So3SampleGrid ifsoft_sequential(const So3Coefficients& coeffs, const TransformPlan& plan) {
  return inverse(coeffs, plan, 1);
}

So3Coefficients fsoft_parallel(const So3SampleGrid& samples, const TransformPlan& plan,
                               int threads) {
  return forward(samples, plan, threads);
}

So3SampleGrid ifsoft_parallel(const So3Coefficients& coeffs, const TransformPlan& plan,
                              int threads) {
  return inverse(coeffs, plan, threads);
}

namespace {

// d(l, m, m'; beta_j) from the closed form, indexed [coeff slot][j].
std::vector<double> direct_d_table(const TransformPlan& plan) {
  const int b = plan.bandwidth().value();
  const auto n = static_cast<std::size_t>(2 * b);
  std::vector<double> table(coeff_count(b) * n);
  for (int l = 0; l < b; ++l)
    for (int m = -l; m <= l; ++m)
      for (int mp = -l; mp <= l; ++mp) {
        const auto slot = coeff_index_unchecked(l, m, mp);
        for (std::size_t j = 0; j < n; ++j)
          table[slot * n + j] = wigner_d_direct(l, m, mp, plan.angles().betas[j]);
      }
  return table;
}

}  // namespace

So3Coefficients fsoft_direct(const So3SampleGrid& samples, const TransformPlan& plan) {
  require_bandwidth(samples.bandwidth, plan, "fsoft_direct");
  require_oracle_cap(plan, "fsoft_direct");
  const int b = plan.bandwidth().value();
  const int n = 2 * b;
  const auto& a = plan.angles();
  const auto& w = plan.weights().w;
  const auto dtab = direct_d_table(plan);
  So3Coefficients out(plan.bandwidth());
  for (int l = 0; l < b; ++l)
    for (int m = -l; m <= l; ++m)
      for (int mp = -l; mp <= l; ++mp) {
        const auto slot = coeff_index_unchecked(l, m, mp);
        Complex acc{};
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
              // conj(D) = exp(+i m alpha) d exp(+i m' gamma)
              const Complex conj_d =
                  std::polar(1.0, m * a.alphas[i] + mp * a.gammas[k]) * dtab[slot * n + j];
              acc += w[j] * samples.at(i, j, k) * conj_d;
            }
        out.data[slot] = (2.0 * l + 1.0) / (8.0 * std::numbers::pi * b) * acc;
      }
  return out;
}

So3SampleGrid ifsoft_direct(const So3Coefficients& coeffs, const TransformPlan& plan) {
  require_bandwidth(coeffs.bandwidth, plan, "ifsoft_direct");
  require_oracle_cap(plan, "ifsoft_direct");
  const int b = plan.bandwidth().value();
  const int n = 2 * b;
  const auto& a = plan.angles();
  const auto dtab = direct_d_table(plan);
  So3SampleGrid out(plan.bandwidth());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Complex acc{};
        for (int l = 0; l < b; ++l)
          for (int m = -l; m <= l; ++m)
            for (int mp = -l; mp <= l; ++mp) {
              const auto slot = coeff_index_unchecked(l, m, mp);
              const Complex d = std::polar(1.0, -(m * a.alphas[i] + mp * a.gammas[k])) *
                                dtab[slot * n + j];
              acc += coeffs.data[slot] * d;
            }
        out.at(i, j, k) = acc;
      }
  return out;
}

}  // namespace so3
