#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "so3fft/fft.hpp"
#include "support.hpp"

using namespace so3;
using std::numbers::pi;

namespace {

// S(m, m'; j) as the literal double sum over (i, k).
Complex naive_slice_sum(const So3SampleGrid& g, int j, int m, int mp) {
  const int n = g.bandwidth.grid_side();
  const double bw = g.bandwidth.value();
  Complex acc{};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      acc += g.at(i, j, k) * std::polar(1.0, m * (i * pi / bw) + mp * (k * pi / bw));
  return acc;
}

std::vector<Complex> random_signal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Complex> v(n);
  for (auto& z : v) z = {u(rng), u(rng)};
  return v;
}

}  // namespace

TEST_CASE("dft_1d examples") {
  const std::vector<Complex> impulse{1, 0, 0, 0};
  for (const auto& z : dft_1d(impulse, +1)) CHECK(std::abs(z - Complex(1, 0)) < 1e-15);
  const std::vector<Complex> ones{1, 1, 1, 1};
  const auto c = dft_1d(ones, +1);
  CHECK(std::abs(c[0] - Complex(4, 0)) < 1e-15);
  for (int q = 1; q < 4; ++q) CHECK(std::abs(c[q]) < 1e-15);
  CHECK_THROWS_AS(DftPlan(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(DftPlan(0, 1), std::invalid_argument);
}

TEST_CASE("dft_1d matches the defining sum and inverts") {
  for (std::size_t n : {1u, 2u, 3u, 5u, 6u, 8u, 12u, 16u, 64u}) {
    const auto x = random_signal(n, n);
    for (int sign : {+1, -1}) {
      const auto y = dft_1d(x, sign);
      for (std::size_t q = 0; q < n; ++q) {
        Complex acc{};
        for (std::size_t p = 0; p < n; ++p)
          acc += x[p] * std::polar(1.0, sign * 2 * pi * double(p * q % n) / double(n));
        CHECK(std::abs(y[q] - acc) < 1e-12);
      }
    }
    auto back = dft_1d(dft_1d(x, +1), -1);
    for (std::size_t p = 0; p < n; ++p) CHECK(std::abs(back[p] / double(n) - x[p]) < 1e-13);
  }
}

TEST_CASE("forward_stage on constants and single frequencies") {
  const Bandwidth b(3);
  const int n = b.grid_side();
  So3SampleGrid c(b);
  for (auto& z : c.data) z = {2.0, -1.0};
  const auto s = forward_stage(c);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m)
      for (int mp = 0; mp < n; ++mp) {
        const Complex expect = (m == 0 && mp == 0) ? Complex(2.0, -1.0) * double(n * n) : 0.0;
        CHECK(std::abs(s.at(j, m, mp) - expect) < 1e-12);
      }

  const auto a = sample_angles(b);
  So3SampleGrid f(b);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) f.at(i, j, k) = std::polar(1.0, -(a.alphas[i] + a.gammas[k]));
  const auto sf = forward_stage(f);
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m)
      for (int mp = 0; mp < n; ++mp) {
        const double expect = (m == 1 && mp == 1) ? double(n * n) : 0.0;
        CHECK(std::abs(sf.data[sf.index(j, m, mp)] - expect) < 1e-12);
      }
}

TEST_CASE("forward_stage agrees with the naive double sum") {
  for (int bw = 1; bw <= 4; ++bw) {
    for (std::uint64_t trial = 0; trial < 3; ++trial) {
      const Bandwidth b(bw);
      const auto g = testing::random_grid(b, 100 * bw + trial);
      const auto s = forward_stage(g);
      for (int j = 0; j < 2 * bw; ++j)
        for (int m = 1 - bw; m < bw; ++m)
          for (int mp = 1 - bw; mp < bw; ++mp)
            CHECK(std::abs(s.at(j, m, mp) - naive_slice_sum(g, j, m, mp)) < 1e-12);
    }
  }
}

TEST_CASE("inverse_stage examples") {
  const Bandwidth b(4);
  const int n = b.grid_side();
  const auto a = sample_angles(b);

  Spectrum only_dc(b);
  for (int j = 0; j < n; ++j) only_dc.at(j, 0, 0) = {0.5, 0.25};
  const auto f = inverse_stage(only_dc);
  for (const auto& z : f.data) CHECK(std::abs(z - Complex(0.5, 0.25)) < 1e-14);

  Spectrum one(b);
  for (int j = 0; j < n; ++j) one.data[one.index(j, 1, n - 1)] = 1.0;  // (m, m') = (1, -1)
  const auto g = inverse_stage(one);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        CHECK(std::abs(g.at(i, j, k) - std::polar(1.0, -(a.alphas[i] - a.gammas[k]))) < 1e-13);
}

TEST_CASE("inverse_stage undoes forward_stage up to (2B)^2") {
  for (int bw : {1, 2, 3, 5, 8, 16, 32}) {
    const Bandwidth b(bw);
    const auto g = testing::random_grid(b, bw);
    auto back = inverse_stage(forward_stage(g));
    const double scale = double(b.grid_side()) * b.grid_side();
    double worst = 0.0;
    for (std::size_t p = 0; p < g.data.size(); ++p)
      worst = std::max(worst, std::abs(back.data[p] / scale - g.data[p]));
    CHECK_MESSAGE(worst < 1e-12, "B=" << bw);
  }
}

TEST_CASE("stages are identical for any thread count") {
  const Bandwidth b(8);
  const auto g = testing::random_grid(b, 5);
  const auto s1 = forward_stage(g, 1);
  for (int t : {2, 3, 8}) {
    CHECK(forward_stage(g, t).data == s1.data);
    CHECK(inverse_stage(s1, t).data == inverse_stage(s1, 1).data);
  }
}
