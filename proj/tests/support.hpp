#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <span>

#include "so3fft/core.hpp"
#include "so3fft/quadrature.hpp"
#include "so3fft/wigner.hpp"

namespace so3::testing {

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(std::span<const Complex> a) {
  double m = 0.0;
  for (const auto& z : a) m = std::max(m, std::abs(z));
  return m;
}

inline So3Coefficients random_coeffs(Bandwidth b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  So3Coefficients c(b);
  for (auto& z : c.data) z = {u(rng), u(rng)};
  return c;
}

inline So3SampleGrid random_grid(Bandwidth b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  So3SampleGrid g(b);
  for (auto& z : g.data) z = {u(rng), u(rng)};
  return g;
}

/// D(l, m, m') sampled on the grid via the closed-form Wigner-d.
inline So3SampleGrid sample_basis(Bandwidth b, int l, int m, int mp) {
  const auto a = sample_angles(b);
  So3SampleGrid g(b);
  const int n = b.grid_side();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        g.at(i, j, k) = wigner_D(l, m, mp, {a.alphas[i], a.betas[j], a.gammas[k]});
  return g;
}

}  // namespace so3::testing
