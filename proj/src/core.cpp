#include "so3fft/core.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace so3 {

std::size_t coeff_index(int l, int m, int mp, Bandwidth b) {
  if (l < 0 || l >= b.value() || std::abs(m) > l || std::abs(mp) > l) {
    throw std::domain_error("coefficient index out of range: (" + std::to_string(l) + "," +
                            std::to_string(m) + "," + std::to_string(mp) + ") for B=" +
                            std::to_string(b.value()));
  }
  return coeff_index_unchecked(l, m, mp);
}

void check_range(const EulerAngles& e) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const bool ok = e.alpha >= 0.0 && e.alpha < two_pi && e.beta >= 0.0 &&
                  e.beta <= std::numbers::pi && e.gamma >= 0.0 && e.gamma < two_pi;
  if (!ok) throw std::domain_error("Euler angles out of range");
}

RotationMatrix rot_y(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {{{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}};
}

RotationMatrix rot_z(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {{{c, -s, 0.0}, {s, c, 0.0}, {0.0, 0.0, 1.0}}};
}

RotationMatrix multiply(const RotationMatrix& a, const RotationMatrix& b) {
  RotationMatrix r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

RotationMatrix euler_to_matrix(const EulerAngles& e) {
  check_range(e);
  return multiply(rot_z(e.gamma), multiply(rot_y(e.beta), rot_z(e.alpha)));
}

}  // namespace so3
