#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "so3fft/core.hpp"

namespace so3 {

struct OrderPair {
  int m = 0;
  int mp = 0;

  friend auto operator<=>(const OrderPair&, const OrderPair&) = default;
};

/// Lowest degree with a nonzero Wigner-d for this order pair.
inline int min_degree(OrderPair p) noexcept {
  const int a = p.m < 0 ? -p.m : p.m;
  const int b = p.mp < 0 ? -p.mp : p.mp;
  return a > b ? a : b;
}

/// The seven Wigner-d symmetries plus the identity. Each maps a source pair
/// (m, m') at beta to a target pair, valid at pi - beta when it reflects:
///   d(l, target; beta') = sign(l) * d(l, m, m'; beta).
enum class Symmetry {
  identity,
  negate_both,            // (-m, -m'),  (-1)^(m-m')
  swap,                   // (m', m),    (-1)^(m-m')
  negate_m_reflect,       // (-m, m'),   (-1)^(l-m'),  pi - beta
  negate_mp_reflect,      // (m, -m'),   (-1)^(l+m),   pi - beta
  swap_negate_m_reflect,  // (-m', m),   (-1)^(l-m'),  pi - beta
  swap_negate_mp_reflect, // (m', -m),   (-1)^(l+m),   pi - beta
  swap_negate_both,       // (-m', -m),  no sign
};

inline constexpr std::array<Symmetry, 7> kSevenSymmetries = {
    Symmetry::negate_both,           Symmetry::swap,
    Symmetry::negate_m_reflect,      Symmetry::negate_mp_reflect,
    Symmetry::swap_negate_m_reflect, Symmetry::swap_negate_mp_reflect,
    Symmetry::swap_negate_both,
};

std::string_view name(Symmetry s);
OrderPair target(Symmetry s, OrderPair source);
bool reflects(Symmetry s);
/// +1 or -1 for degree l, expressed in the source orders.
int sign(Symmetry s, int l, OrderPair source);

/// P_n^{(a,b)}(x) by the three-term recurrence in n.
double jacobi_poly(int n, int a, int b, double x);

/// Closed form via a Jacobi polynomial, after mapping (m, m') to the
/// representative with m' >= |m|. Reference evaluation; slow.
double wigner_d_direct(int l, int m, int mp, double beta);

/// d(L, m, m'; beta) at the seed degree L = max(|m|, |m'|).
double wigner_d_seed(int m, int mp, double beta);

/// Wigner-D(l, m, m'; alpha, beta, gamma) = exp(-i m alpha) d(l,m,m';beta) exp(-i m' gamma).
Complex wigner_D(int l, int m, int mp, const EulerAngles& e);

struct WignerColumn {
  OrderPair orders;
  double beta = 0.0;
  /// d(l, m, m'; beta) for l = min_degree(orders) .. B-1.
  std::vector<double> values;

  int first_degree() const noexcept { return min_degree(orders); }
};

WignerColumn wigner_d_column(int m, int mp, double beta, Bandwidth b);

/// Column for target(rel, col.orders), at pi - beta when rel reflects.
WignerColumn apply_symmetry(const WignerColumn& col, Symmetry rel);

/// Degree-dependent factors of the three-term recurrence for one order pair.
/// Step from degree l to l+1:  d(l+1) = a[l] (cos beta - c[l]) d(l) - b[l] d(l-1),
/// with the d(L-1) term dropped at the seed degree L.
struct RecurrenceCoefficients {
  RecurrenceCoefficients(OrderPair p, Bandwidth b);

  int first_degree;
  std::vector<double> a, b, c;  // indexed by l - first_degree
};

}  // namespace so3
