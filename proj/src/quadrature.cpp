#include "so3fft/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace so3 {

SampleAngles sample_angles(Bandwidth b) {
  const int n = b.grid_side();
  const double bb = b.value();
  SampleAngles a;
  a.alphas.resize(n);
  a.betas.resize(n);
  a.gammas.resize(n);
  for (int i = 0; i < n; ++i) {
    a.alphas[i] = i * std::numbers::pi / bb;
    a.betas[i] = (2.0 * i + 1.0) * std::numbers::pi / (4.0 * bb);
    a.gammas[i] = a.alphas[i];
  }
  return a;
}

QuadratureWeights quadrature_weights(Bandwidth b) {
  const int n = b.grid_side();
  const double bb = b.value();
  const auto betas = sample_angles(b).betas;
  QuadratureWeights q{b, std::vector<double>(n)};
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int i = 0; i < b.value(); ++i) {
      const double odd = 2.0 * i + 1.0;
      sum += std::sin(odd * betas[j]) / odd;
    }
    q.w[j] = 2.0 * std::numbers::pi * std::sin(betas[j]) / (bb * bb) * sum;
  }
  return q;
}

}  // namespace so3
