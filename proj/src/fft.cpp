#include "so3fft/fft.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <stdexcept>

#include "so3fft/schedule.hpp"

namespace so3 {

DftPlan::DftPlan(std::size_t n, int sign) : n_(n), sign_(sign), pow2_(std::has_single_bit(n)) {
  if (n == 0) throw std::invalid_argument("DFT length must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("DFT sign must be +1 or -1");
  const std::size_t count = pow2_ ? n / 2 : n;
  twiddles_.resize(count);
  for (std::size_t k = 0; k < count; ++k)
    twiddles_[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * double(k) / double(n));
  if (pow2_) {
    const int bits = std::countr_zero(n);
    bitrev_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t r = 0;
      for (int b = 0; b < bits; ++b)
        if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
      bitrev_[i] = r;
    }
  }
}

void DftPlan::execute(std::span<Complex> data, std::span<Complex> scratch) const {
  if (data.size() != n_) throw std::invalid_argument("DFT input length mismatch");
  if (!pow2_) {
    if (scratch.size() < n_) throw std::invalid_argument("DFT scratch too small");
    for (std::size_t q = 0; q < n_; ++q) {
      Complex acc{};
      for (std::size_t p = 0; p < n_; ++p) acc += data[p] * twiddles_[(p * q) % n_];
      scratch[q] = acc;
    }
    std::copy_n(scratch.begin(), n_, data.begin());
    return;
  }
  for (std::size_t i = 0; i < n_; ++i)
    if (i < bitrev_[i]) std::swap(data[i], data[bitrev_[i]]);
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n_ / len;
    for (std::size_t start = 0; start < n_; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex t = twiddles_[k * stride] * data[start + k + half];
        const Complex u = data[start + k];
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

std::vector<Complex> dft_1d(std::span<const Complex> signal, int sign) {
  std::vector<Complex> out(signal.begin(), signal.end());
  std::vector<Complex> scratch(signal.size());
  DftPlan(signal.size(), sign).execute(out, scratch);
  return out;
}

namespace {

// 2D transform of an n x n row-major plane: along rows (second index), then columns.
void transform_plane(const DftPlan& plan, std::span<Complex> plane, std::vector<Complex>& column,
                     std::vector<Complex>& scratch) {
  const std::size_t n = plan.size();
  for (std::size_t r = 0; r < n; ++r) plan.execute(plane.subspan(r * n, n), scratch);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) column[r] = plane[r * n + c];
    plan.execute(column, scratch);
    for (std::size_t r = 0; r < n; ++r) plane[r * n + c] = column[r];
  }
}

}  // namespace

void forward_stage(const So3SampleGrid& samples, Spectrum& out, int threads) {
  if (!(samples.bandwidth == out.bandwidth))
    throw std::invalid_argument("forward_stage: bandwidth mismatch");
  const int n = samples.bandwidth.grid_side();
  const DftPlan plan(static_cast<std::size_t>(n), +1);
  run_items(
      static_cast<std::size_t>(n),
      [&](std::size_t item) {
        const int j = static_cast<int>(item);
        std::vector<Complex> column(n), scratch(n);
        auto plane = out.slice(j);
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) plane[std::size_t(i) * n + k] = samples.at(i, j, k);
        transform_plane(plan, plane, column, scratch);
      },
      threads);
}

Spectrum forward_stage(const So3SampleGrid& samples, int threads) {
  Spectrum out(samples.bandwidth);
  forward_stage(samples, out, threads);
  return out;
}

void inverse_stage(const Spectrum& spectra, So3SampleGrid& out, int threads) {
  if (!(spectra.bandwidth == out.bandwidth))
    throw std::invalid_argument("inverse_stage: bandwidth mismatch");
  const int n = spectra.bandwidth.grid_side();
  const DftPlan plan(static_cast<std::size_t>(n), -1);
  run_items(
      static_cast<std::size_t>(n),
      [&](std::size_t item) {
        const int j = static_cast<int>(item);
        std::vector<Complex> plane(spectra.slice(j).begin(), spectra.slice(j).end());
        std::vector<Complex> column(n), scratch(n);
        transform_plane(plan, plane, column, scratch);
        for (int i = 0; i < n; ++i)
          for (int k = 0; k < n; ++k) out.at(i, j, k) = plane[std::size_t(i) * n + k];
      },
      threads);
}

So3SampleGrid inverse_stage(const Spectrum& spectra, int threads) {
  So3SampleGrid out(spectra.bandwidth);
  inverse_stage(spectra, out, threads);
  return out;
}

}  // namespace so3
