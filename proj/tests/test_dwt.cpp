#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "so3fft/dwt.hpp"
#include "so3fft/fft.hpp"
#include "support.hpp"

using namespace so3;
using std::numbers::pi;

TEST_CASE("build_wigner_matrix examples") {
  const Bandwidth b2(2);
  const auto betas = sample_angles(b2).betas;

  const auto t00 = build_wigner_matrix(0, 0, b2);
  REQUIRE(t00.rows() == 2);
  REQUIRE(t00.cols() == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(t00.at(0, j) == doctest::Approx(1.0));
    CHECK(std::abs(t00.at(1, j) - std::cos(betas[j])) < 1e-15);
  }

  const auto t11 = build_wigner_matrix(1, 1, b2);
  REQUIRE(t11.rows() == 1);
  for (int j = 0; j < 4; ++j)
    CHECK(std::abs(t11.at(1, j) - std::pow(std::cos(betas[j] / 2), 2)) < 1e-15);

  for (int bw : {1, 3, 7}) {
    const auto t = build_wigner_matrix(bw - 1, bw - 1, Bandwidth(bw));
    CHECK(t.rows() == 1);
  }
  CHECK_THROWS_AS(build_wigner_matrix(2, 0, b2), std::domain_error);
}

TEST_CASE("matrix columns are recurrence columns and match the closed form") {
  const Bandwidth b(12);
  const auto betas = sample_angles(b).betas;
  for (int m = -11; m <= 11; ++m)
    for (int mp = -11; mp <= 11; ++mp) {
      const auto t = build_wigner_matrix(m, mp, b);
      for (int j = 0; j < b.grid_side(); ++j) {
        const auto col = wigner_d_column(m, mp, betas[j], b);
        for (std::size_t r = 0; r < t.rows(); ++r) {
          const int l = t.first_degree() + int(r);
          CHECK(t.at(l, j) == col.values[r]);
          CHECK(std::abs(t.at(l, j)) <= 1.0 + 1e-9);
          CHECK(std::abs(t.at(l, j) - wigner_d_direct(l, m, mp, betas[j])) < 1e-10);
        }
      }
    }
}

TEST_CASE("derive_cluster_matrices examples") {
  const Bandwidth b(5);
  const auto base = build_wigner_matrix(2, 1, b);
  const auto derived = derive_cluster_matrices(base, make_cluster({2, 1}));
  REQUIRE(derived.size() == 8);
  const auto& nb = derived.at({-2, -1});
  const auto& snb = derived.at({-1, -2});
  const auto& nm = derived.at({-2, 1});
  const int n = b.grid_side();
  for (int l = 2; l < 5; ++l)
    for (int j = 0; j < n; ++j) {
      CHECK(nb.at(l, j) == -base.at(l, j));
      CHECK(snb.at(l, j) == base.at(l, j));
      CHECK(nm.at(l, j) == ((l - 1) % 2 == 0 ? 1 : -1) * base.at(l, n - 1 - j));
    }
  CHECK_THROWS_AS(derive_cluster_matrices(base, make_cluster({3, 1})), std::invalid_argument);
}

TEST_CASE("derived matrices equal directly built ones for every cluster (B <= 16)") {
  for (int bw = 1; bw <= 16; ++bw) {
    const Bandwidth b(bw);
    for (const auto& cluster : enumerate_clusters(b)) {
      const auto base = build_wigner_matrix(cluster.base.m, cluster.base.mp, b);
      for (const auto& [orders, derived] : derive_cluster_matrices(base, cluster)) {
        const auto direct = build_wigner_matrix(orders.m, orders.mp, b);
        double worst = 0.0;
        for (std::size_t r = 0; r < direct.rows(); ++r)
          for (std::size_t j = 0; j < direct.cols(); ++j)
            worst = std::max(worst, std::abs(derived.row(r)[j] - direct.row(r)[j]));
        CHECK_MESSAGE(worst < 1e-12, "B=" << bw << " (" << orders.m << "," << orders.mp << ")");
      }
    }
  }
}

TEST_CASE("dwt_apply on a constant slice for B = 2") {
  const Bandwidth b(2);
  const auto t = build_wigner_matrix(0, 0, b);
  const DwtScalers s(0, quadrature_weights(b));
  const std::vector<Complex> ones(4, 1.0);
  const auto out = dwt_apply(t, s, ones);
  REQUIRE(out.size() == 2);
  CHECK(std::abs(out[0] - 1.0 / 16.0) < 1e-15);
  CHECK(std::abs(out[1]) < 1e-15);

  const std::vector<Complex> zeros(4);
  for (const auto& z : dwt_apply(t, s, zeros)) CHECK(z == Complex{});
  CHECK_THROWS_AS(dwt_apply(t, s, std::vector<Complex>(3)), std::invalid_argument);
}

TEST_CASE("dwt scalers") {
  const DwtScalers s(3, quadrature_weights(Bandwidth(8)));
  REQUIRE(s.v.size() == 5);
  CHECK(s.v[0] == doctest::Approx(7.0 / (64 * pi)));
  for (std::size_t i = 1; i < s.v.size(); ++i) CHECK(s.v[i] > s.v[i - 1]);
  CHECK(s.v[0] > 0.0);
}

TEST_CASE("dwt_apply recovers a single basis function") {
  const Bandwidth b(6);
  for (auto [l0, m, mp] : {std::tuple{3, 1, -2}, std::tuple{5, 0, 0}, std::tuple{4, -4, 3}}) {
    const auto spectra = forward_stage(testing::sample_basis(b, l0, m, mp));
    std::vector<Complex> slice(b.grid_side());
    for (int j = 0; j < b.grid_side(); ++j) slice[j] = spectra.at(j, m, mp);
    const auto t = build_wigner_matrix(m, mp, b);
    const auto out = dwt_apply(t, DwtScalers(t.first_degree(), quadrature_weights(b)), slice);
    for (std::size_t r = 0; r < out.size(); ++r) {
      const double expect = (t.first_degree() + int(r) == l0) ? 1.0 : 0.0;
      CHECK(std::abs(out[r] - expect) < 1e-10);
    }
  }
}

TEST_CASE("idwt_apply") {
  const Bandwidth b(4);
  const auto betas = sample_angles(b).betas;
  const auto t = build_wigner_matrix(1, -1, b);
  std::vector<Complex> e(t.rows());
  e[1] = 1.0;
  const auto row = idwt_apply(t, e);
  for (int j = 0; j < 8; ++j) CHECK(row[j] == t.at(2, j));
  for (const auto& z : idwt_apply(t, std::vector<Complex>(t.rows()))) CHECK(z == Complex{});
  CHECK_THROWS_AS(idwt_apply(t, std::vector<Complex>(t.rows() + 1)), std::invalid_argument);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Complex> c(t.rows());
  for (auto& z : c) z = {u(rng), u(rng)};
  const auto out = idwt_apply(t, c);
  for (int j = 0; j < 8; ++j) {
    Complex acc{};
    for (std::size_t r = 0; r < c.size(); ++r)
      acc += c[r] * wigner_d_direct(t.first_degree() + int(r), 1, -1, betas[j]);
    CHECK(std::abs(out[j] - acc) < 1e-12);
  }
}

TEST_CASE("dwt kernels are linear") {
  const Bandwidth b(8);
  const auto t = build_wigner_matrix(3, -2, b);
  const DwtScalers s(t.first_degree(), quadrature_weights(b));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  auto rand_vec = [&](std::size_t n) {
    std::vector<Complex> v(n);
    for (auto& z : v) z = {u(rng), u(rng)};
    return v;
  };
  const Complex a{0.3, -1.2}, c{-0.7, 0.4};
  const auto x = rand_vec(t.cols()), y = rand_vec(t.cols());
  std::vector<Complex> comb(t.cols());
  for (std::size_t j = 0; j < comb.size(); ++j) comb[j] = a * x[j] + c * y[j];
  const auto fx = dwt_apply(t, s, x), fy = dwt_apply(t, s, y), fc = dwt_apply(t, s, comb);
  for (std::size_t r = 0; r < fc.size(); ++r) CHECK(std::abs(fc[r] - (a * fx[r] + c * fy[r])) < 1e-12);

  const auto p = rand_vec(t.rows()), q = rand_vec(t.rows());
  std::vector<Complex> pc(t.rows());
  for (std::size_t r = 0; r < pc.size(); ++r) pc[r] = a * p[r] + c * q[r];
  const auto gp = idwt_apply(t, p), gq = idwt_apply(t, q), gc = idwt_apply(t, pc);
  for (std::size_t j = 0; j < gc.size(); ++j) CHECK(std::abs(gc[j] - (a * gp[j] + c * gq[j])) < 1e-12);
}

TEST_CASE("cluster kernels agree with per-member dwt_apply / idwt_apply") {
  const Bandwidth b(9);
  const auto g = testing::random_grid(b, 21);
  const auto spectra = forward_stage(g);
  const auto q = quadrature_weights(b);
  std::vector<double> v_all(b.value());
  for (int l = 0; l < b.value(); ++l) v_all[l] = (2.0 * l + 1) / (8 * pi * b.value());
  const auto coeffs = testing::random_coeffs(b, 22);

  for (const auto& cluster : enumerate_clusters(b)) {
    const auto base = build_wigner_matrix(cluster.base.m, cluster.base.mp, b);
    So3Coefficients out(b);
    Spectrum inv(b);
    ClusterWorkspace ws;
    forward_cluster(cluster, base, q.w, v_all, spectra, out, ws);
    inverse_cluster(cluster, base, coeffs, inv, ws);
    for (const auto& mem : cluster.members) {
      const auto t = build_wigner_matrix(mem.orders.m, mem.orders.mp, b);
      std::vector<Complex> slice(b.grid_side());
      for (int j = 0; j < b.grid_side(); ++j) slice[j] = spectra.at(j, mem.orders.m, mem.orders.mp);
      const auto ref = dwt_apply(t, DwtScalers(t.first_degree(), q), slice);
      std::vector<Complex> col(t.rows());
      for (std::size_t r = 0; r < t.rows(); ++r) {
        const int l = t.first_degree() + int(r);
        CHECK(std::abs(out.at(l, mem.orders.m, mem.orders.mp) - ref[r]) < 1e-12);
        col[r] = coeffs.at(l, mem.orders.m, mem.orders.mp);
      }
      const auto gref = idwt_apply(t, col);
      for (int j = 0; j < b.grid_side(); ++j)
        CHECK(std::abs(inv.at(j, mem.orders.m, mem.orders.mp) - gref[j]) < 1e-12);
    }
  }
}
