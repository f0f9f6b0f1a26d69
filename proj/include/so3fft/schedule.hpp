#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "so3fft/core.hpp"
#include "so3fft/wigner.hpp"

namespace so3 {

// Triangle linearization over 0 <= m' <= m: sigma = m(m+1)/2 + m'.
std::size_t sigma_index(int m, int mp);
/// Recovers (m, m') with the floating-point square root formula.
OrderPair sigma_inverse(std::size_t sigma);

/// Rectangle cell (i, j) to a strict-lower-triangle pair 1 <= m' < m <= B-1.
/// Cells with j > i come from the mirrored upper part of the triangle.
OrderPair rect_to_orders(int i, int j, Bandwidth b);

/// Number of full (eight-member) clusters: (B-1)(B-2)/2.
std::size_t kappa_count(Bandwidth b) noexcept;
/// kappa -> (i, j) with i = kappa/(B-1) + 1, j = kappa mod (B-1) + 1.
std::pair<int, int> kappa_split(std::size_t kappa, Bandwidth b);

enum class ClusterKind { origin, axis, diagonal, full };

struct ClusterMember {
  OrderPair orders;
  Symmetry relation;  // maps the cluster base onto `orders`
};

struct SymmetryCluster {
  ClusterKind kind;
  OrderPair base;
  std::vector<ClusterMember> members;  // first member is the base itself
};

/// Cluster with base (m, m'), 0 <= m' <= m. The kind follows from the orders.
SymmetryCluster make_cluster(OrderPair base);

enum class Partitioner {
  kappa,  // origin, axis m = 1..B-1, diagonal m = 1..B-1, then full clusters in kappa order
  sigma,  // every cluster in sigma order over 0 <= m' <= m < B
};

std::vector<SymmetryCluster> enumerate_clusters(Bandwidth b,
                                                Partitioner p = Partitioner::kappa);

class ItemFailure : public std::runtime_error {
 public:
  ItemFailure(std::size_t item, const std::string& what)
      : std::runtime_error("work item " + std::to_string(item) + " failed: " + what),
        item_(item) {}
  std::size_t item() const noexcept { return item_; }

 private:
  std::size_t item_;
};

/// Runs worker(0) .. worker(count-1), each exactly once, with dynamic assignment
/// to `threads` OpenMP threads and a barrier before returning. Items must write
/// disjoint outputs. threads == 1 is a plain loop. A throwing item cancels the
/// items not yet started; the lowest failing index is rethrown as ItemFailure.
void run_items(std::size_t count, const std::function<void(std::size_t)>& worker, int threads);

}  // namespace so3
