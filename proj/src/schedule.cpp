#include "so3fft/schedule.hpp"

#include <omp.h>

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>

namespace so3 {

std::size_t sigma_index(int m, int mp) {
  if (mp < 0 || mp > m) throw std::domain_error("sigma_index: need 0 <= m' <= m");
  const auto mm = static_cast<std::size_t>(m);
  return mm * (mm + 1) / 2 + static_cast<std::size_t>(mp);
}

OrderPair sigma_inverse(std::size_t sigma) {
  const double s = static_cast<double>(sigma);
  const auto m = static_cast<std::size_t>(std::floor(std::sqrt(2.0 * s + 0.25) - 0.5));
  return {static_cast<int>(m), static_cast<int>(sigma - m * (m + 1) / 2)};
}

OrderPair rect_to_orders(int i, int j, Bandwidth b) {
  const int bw = b.value();
  const bool ok = i >= 1 && i <= (bw - 1) / 2 && j >= 1 && j <= bw - 1 &&
                  !(bw % 2 == 1 && i == (bw - 1) / 2 && j > (bw - 1) / 2);
  if (!ok)
    throw std::domain_error("rect_to_orders: cell (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside the rectangle for B=" +
                            std::to_string(bw));
  if (j > i) return {bw - i, bw - j};
  return {i + 1, j};
}

std::size_t kappa_count(Bandwidth b) noexcept {
  const auto bw = static_cast<std::size_t>(b.value());
  return bw < 3 ? 0 : (bw - 1) * (bw - 2) / 2;
}

std::pair<int, int> kappa_split(std::size_t kappa, Bandwidth b) {
  if (kappa >= kappa_count(b))
    throw std::domain_error("kappa_split: kappa " + std::to_string(kappa) + " out of range");
  const auto width = static_cast<std::size_t>(b.value() - 1);
  return {static_cast<int>(kappa / width) + 1, static_cast<int>(kappa % width) + 1};
}

SymmetryCluster make_cluster(OrderPair base) {
  if (base.mp < 0 || base.mp > base.m)
    throw std::domain_error("make_cluster: base needs 0 <= m' <= m");
  SymmetryCluster c{ClusterKind::full, base, {{base, Symmetry::identity}}};
  auto add = [&](Symmetry s) { c.members.push_back({target(s, base), s}); };
  if (base.m == 0) {
    c.kind = ClusterKind::origin;
  } else if (base.mp == 0) {
    c.kind = ClusterKind::axis;
    add(Symmetry::negate_both);
    add(Symmetry::swap);
    add(Symmetry::swap_negate_both);
  } else if (base.mp == base.m) {
    c.kind = ClusterKind::diagonal;
    add(Symmetry::negate_both);
    add(Symmetry::negate_mp_reflect);
    add(Symmetry::negate_m_reflect);
  } else {
    for (auto s : kSevenSymmetries) add(s);
  }
  return c;
}

std::vector<SymmetryCluster> enumerate_clusters(Bandwidth b, Partitioner p) {
  const int bw = b.value();
  std::vector<SymmetryCluster> out;
  if (p == Partitioner::sigma) {
    const auto total = static_cast<std::size_t>(bw) * (bw + 1) / 2;
    out.reserve(total);
    for (std::size_t s = 0; s < total; ++s) out.push_back(make_cluster(sigma_inverse(s)));
    return out;
  }
  out.reserve(2 * bw - 1 + kappa_count(b));
  out.push_back(make_cluster({0, 0}));
  for (int m = 1; m < bw; ++m) out.push_back(make_cluster({m, 0}));
  for (int m = 1; m < bw; ++m) out.push_back(make_cluster({m, m}));
  for (std::size_t k = 0; k < kappa_count(b); ++k) {
    const auto [i, j] = kappa_split(k, b);
    out.push_back(make_cluster(rect_to_orders(i, j, b)));
  }
  return out;
}

void run_items(std::size_t count, const std::function<void(std::size_t)>& worker, int threads) {
  if (threads < 1) throw std::invalid_argument("run_items: threads must be >= 1");
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        worker(i);
      } catch (const std::exception& e) {
        throw ItemFailure(i, e.what());
      }
    }
    return;
  }

  std::atomic<bool> cancelled{false};
  std::mutex failure_mutex;
  std::size_t failed_item = std::numeric_limits<std::size_t>::max();
  std::string failure_what;

  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    if (cancelled.load(std::memory_order_relaxed)) continue;
    try {
      worker(static_cast<std::size_t>(i));
    } catch (const std::exception& e) {
      cancelled.store(true, std::memory_order_relaxed);
      std::lock_guard lock(failure_mutex);
      if (static_cast<std::size_t>(i) < failed_item) {
        failed_item = static_cast<std::size_t>(i);
        failure_what = e.what();
      }
    } catch (...) {
      cancelled.store(true, std::memory_order_relaxed);
      std::lock_guard lock(failure_mutex);
      if (static_cast<std::size_t>(i) < failed_item) {
        failed_item = static_cast<std::size_t>(i);
        failure_what = "unknown exception";
      }
    }
  }
  if (cancelled.load()) throw ItemFailure(failed_item, failure_what);
}

}  // namespace so3
