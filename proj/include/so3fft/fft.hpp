#pragma once

#include <span>
#include <vector>

#include "so3fft/core.hpp"

namespace so3 {

/// Unnormalized DFT of fixed length and sign:
///   out[q] = sum_p in[p] exp(sign * i * 2 pi p q / n).
/// Radix-2 iterative for power-of-two n, direct summation otherwise.
class DftPlan {
 public:
  DftPlan(std::size_t n, int sign);

  std::size_t size() const noexcept { return n_; }
  int sign() const noexcept { return sign_; }

  /// In place. `scratch` must hold size() elements when size() is not a power of two.
  void execute(std::span<Complex> data, std::span<Complex> scratch) const;

 private:
  std::size_t n_;
  int sign_;
  bool pow2_;
  std::vector<Complex> twiddles_;  // exp(sign i 2 pi k / n), k < n (direct) or n/2 (radix-2)
  std::vector<std::size_t> bitrev_;
};

std::vector<Complex> dft_1d(std::span<const Complex> signal, int sign);

/// Per-slice spectra S(m, m'; j) for all j, bin (m mod 2B, m' mod 2B).
/// Layout: (j * 2B + m_bin) * 2B + mp_bin. Bins with |order| = B are never read.
struct Spectrum {
  explicit Spectrum(Bandwidth b) : bandwidth(b), data(b.grid_size()) {}

  int bin(int order) const noexcept {
    const int n = bandwidth.grid_side();
    return order < 0 ? order + n : order;
  }
  std::size_t index(int j, int m, int mp) const noexcept {
    const auto n = static_cast<std::size_t>(bandwidth.grid_side());
    return (static_cast<std::size_t>(j) * n + static_cast<std::size_t>(bin(m))) * n +
           static_cast<std::size_t>(bin(mp));
  }
  Complex& at(int j, int m, int mp) { return data[index(j, m, mp)]; }
  const Complex& at(int j, int m, int mp) const { return data[index(j, m, mp)]; }

  /// Contiguous (2B)x(2B) slice for one beta index.
  std::span<Complex> slice(int j) {
    const auto n = static_cast<std::size_t>(bandwidth.grid_side());
    return std::span<Complex>(data).subspan(static_cast<std::size_t>(j) * n * n, n * n);
  }
  std::span<const Complex> slice(int j) const {
    const auto n = static_cast<std::size_t>(bandwidth.grid_side());
    return std::span<const Complex>(data).subspan(static_cast<std::size_t>(j) * n * n, n * n);
  }

  Bandwidth bandwidth;
  std::vector<Complex> data;
};

/// S(m, m'; j) = sum_{i,k} f(alpha_i, beta_j, gamma_k) exp(+i (m alpha_i + m' gamma_k)).
/// Slices run through run_items with `threads` workers; results do not depend on it.
Spectrum forward_stage(const So3SampleGrid& samples, int threads = 1);
void forward_stage(const So3SampleGrid& samples, Spectrum& out, int threads = 1);

/// f(alpha_i, beta_j, gamma_k) = sum_{m,m'} g(m, m'; j) exp(-i (m alpha_i + m' gamma_k)).
So3SampleGrid inverse_stage(const Spectrum& spectra, int threads = 1);
void inverse_stage(const Spectrum& spectra, So3SampleGrid& out, int threads = 1);

}  // namespace so3
