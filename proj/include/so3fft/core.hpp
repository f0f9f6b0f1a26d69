#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace so3 {

using Complex = std::complex<double>;

/// Band limit B >= 1. Functions use degrees l < B; the sampling grid has side 2B.
class Bandwidth {
 public:
  explicit Bandwidth(int value) : value_(value) {
    if (value < 1) throw std::invalid_argument("bandwidth must be >= 1");
  }

  int value() const noexcept { return value_; }
  int grid_side() const noexcept { return 2 * value_; }
  std::size_t grid_size() const noexcept {
    const auto n = static_cast<std::size_t>(grid_side());
    return n * n * n;
  }

  friend bool operator==(Bandwidth, Bandwidth) = default;

 private:
  int value_;
};

/// Number of coefficients f(l,m,m') with |m|,|m'| <= l < B, i.e. B(4B^2-1)/3.
constexpr std::size_t coeff_count(int b) noexcept {
  const auto bb = static_cast<std::size_t>(b);
  return bb * (4 * bb * bb - 1) / 3;
}
inline std::size_t coeff_count(Bandwidth b) noexcept { return coeff_count(b.value()); }

/// Offset of the degree-l block: l(4l^2-1)/3.
constexpr std::size_t degree_offset(int l) noexcept { return coeff_count(l); }

/// Slot of (l, m, m') in the l-major triangular layout. Throws std::domain_error
/// when the triple is outside |m|,|m'| <= l < B.
std::size_t coeff_index(int l, int m, int mp, Bandwidth b);

/// Unchecked variant for hot loops.
constexpr std::size_t coeff_index_unchecked(int l, int m, int mp) noexcept {
  return degree_offset(l) + static_cast<std::size_t>((m + l) * (2 * l + 1) + (mp + l));
}

struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Throws std::domain_error unless alpha, gamma in [0, 2pi) and beta in [0, pi].
void check_range(const EulerAngles& e);

using RotationMatrix = std::array<std::array<double, 3>, 3>;

RotationMatrix rot_y(double angle);
RotationMatrix rot_z(double angle);
RotationMatrix multiply(const RotationMatrix& a, const RotationMatrix& b);

/// z-y-z decomposition: R_z(gamma) R_y(beta) R_z(alpha).
RotationMatrix euler_to_matrix(const EulerAngles& e);

struct So3Coefficients {
  explicit So3Coefficients(Bandwidth b) : bandwidth(b), data(coeff_count(b)) {}

  Complex& at(int l, int m, int mp) { return data[coeff_index(l, m, mp, bandwidth)]; }
  const Complex& at(int l, int m, int mp) const {
    return data[coeff_index(l, m, mp, bandwidth)];
  }

  Bandwidth bandwidth;
  std::vector<Complex> data;
};

/// Samples f(alpha_i, beta_j, gamma_k) at index (i*2B + j)*2B + k.
struct So3SampleGrid {
  explicit So3SampleGrid(Bandwidth b) : bandwidth(b), data(b.grid_size()) {}

  std::size_t index(int i, int j, int k) const noexcept {
    const auto n = static_cast<std::size_t>(bandwidth.grid_side());
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
           static_cast<std::size_t>(k);
  }
  Complex& at(int i, int j, int k) { return data[index(i, j, k)]; }
  const Complex& at(int i, int j, int k) const { return data[index(i, j, k)]; }

  Bandwidth bandwidth;
  std::vector<Complex> data;
};

}  // namespace so3
