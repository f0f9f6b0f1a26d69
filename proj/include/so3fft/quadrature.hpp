#pragma once

#include <vector>

#include "so3fft/core.hpp"

namespace so3 {

/// Equiangular grid: alpha_i = i pi/B, beta_j = (2j+1) pi/(4B), gamma_k = k pi/B.
struct SampleAngles {
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<double> gammas;
};

SampleAngles sample_angles(Bandwidth b);

/// Weights w_B(j), j = 0..2B-1, making the sampled quadrature exact on degrees < B.
struct QuadratureWeights {
  Bandwidth bandwidth;
  std::vector<double> w;
};

QuadratureWeights quadrature_weights(Bandwidth b);

}  // namespace so3
