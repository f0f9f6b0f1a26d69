#include "so3fft/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace so3 {
namespace {

int parity(int n) { return (n % 2 == 0) ? 1 : -1; }

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// Accumulates a signed product of powers in log space: sign * exp(log_mag).
struct LogProduct {
  int sign = 1;
  double log_mag = 0.0;

  void times_power(double base, int exponent) {
    if (exponent == 0) return;
    if (base < 0.0 && exponent % 2 != 0) sign = -sign;
    log_mag += exponent * std::log(std::abs(base));
  }
  double value() const { return sign * std::exp(log_mag); }
};

void check_orders(int l, int m, int mp) {
  if (l < 0 || std::abs(m) > l || std::abs(mp) > l)
    throw std::domain_error("Wigner-d orders out of range: l=" + std::to_string(l) +
                            " m=" + std::to_string(m) + " m'=" + std::to_string(mp));
}

}  // namespace

std::string_view name(Symmetry s) {
  switch (s) {
    case Symmetry::identity: return "identity";
    case Symmetry::negate_both: return "negate-both";
    case Symmetry::swap: return "swap";
    case Symmetry::negate_m_reflect: return "negate-m-reflect";
    case Symmetry::negate_mp_reflect: return "negate-mp-reflect";
    case Symmetry::swap_negate_m_reflect: return "swap-negate-m-reflect";
    case Symmetry::swap_negate_mp_reflect: return "swap-negate-mp-reflect";
    case Symmetry::swap_negate_both: return "swap-negate-both";
  }
  return "?";
}

OrderPair target(Symmetry s, OrderPair p) {
  switch (s) {
    case Symmetry::identity: return p;
    case Symmetry::negate_both: return {-p.m, -p.mp};
    case Symmetry::swap: return {p.mp, p.m};
    case Symmetry::negate_m_reflect: return {-p.m, p.mp};
    case Symmetry::negate_mp_reflect: return {p.m, -p.mp};
    case Symmetry::swap_negate_m_reflect: return {-p.mp, p.m};
    case Symmetry::swap_negate_mp_reflect: return {p.mp, -p.m};
    case Symmetry::swap_negate_both: return {-p.mp, -p.m};
  }
  return p;
}

bool reflects(Symmetry s) {
  switch (s) {
    case Symmetry::negate_m_reflect:
    case Symmetry::negate_mp_reflect:
    case Symmetry::swap_negate_m_reflect:
    case Symmetry::swap_negate_mp_reflect:
      return true;
    default:
      return false;
  }
}

int sign(Symmetry s, int l, OrderPair p) {
  switch (s) {
    case Symmetry::negate_both:
    case Symmetry::swap:
      return parity(p.m - p.mp);
    case Symmetry::negate_m_reflect:
    case Symmetry::swap_negate_m_reflect:
      return parity(l - p.mp);
    case Symmetry::negate_mp_reflect:
    case Symmetry::swap_negate_mp_reflect:
      return parity(l + p.m);
    default:
      return 1;
  }
}

double jacobi_poly(int n, int a, int b, double x) {
  if (n < 0 || a <= -1 || b <= -1)
    throw std::domain_error("jacobi_poly: need n >= 0 and exponents > -1");
  if (n == 0) return 1.0;
  const double ad = a, bd = b;
  double prev = 1.0;
  double cur = (ad + 1.0) + (ad + bd + 2.0) * (x - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + ad + bd;
    const double lhs = 2.0 * k * (k + ad + bd) * (s - 2.0);
    const double next = ((s - 1.0) * (s * (s - 2.0) * x + ad * ad - bd * bd) * cur -
                         2.0 * (k + ad - 1.0) * (k + bd - 1.0) * s * prev) /
                        lhs;
    prev = cur;
    cur = next;
  }
  return cur;
}

double wigner_d_direct(int l, int m, int mp, double beta) {
  check_orders(l, m, mp);

  // Representative (a, b) with b >= |a|, so both powers below are nonnegative.
  int a = m, b = mp, factor = 1;
  if (std::abs(mp) >= std::abs(m)) {
    if (mp < 0) { a = -m; b = -mp; factor = parity(m - mp); }
  } else if (m > 0) {
    a = mp; b = m; factor = parity(m - mp);
  } else {
    a = -mp; b = -m;
  }

  LogProduct p;
  p.log_mag = 0.5 * (log_factorial(l + b) + log_factorial(l - b) - log_factorial(l + a) -
                     log_factorial(l - a));
  p.times_power(std::sin(beta / 2.0), b - a);
  p.times_power(std::cos(beta / 2.0), a + b);
  const double jac = jacobi_poly(l - b, b - a, a + b, std::cos(beta));
  return factor * parity(a + b) * p.value() * jac;
}

double wigner_d_seed(int m, int mp, double beta) {
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  LogProduct p;
  if (std::abs(m) >= std::abs(mp)) {
    // d(l, +-l, m') with l = |m|
    const int l = std::abs(m);
    const int pm = m >= 0 ? 1 : -1;
    p.log_mag = 0.5 * (log_factorial(2 * l) - log_factorial(l + mp) - log_factorial(l - mp));
    p.times_power(c, l + pm * mp);
    p.times_power(pm * s, l - pm * mp);
  } else {
    // d(l, m, +-l) with l = |m'|
    const int l = std::abs(mp);
    const int pm = mp >= 0 ? 1 : -1;
    p.log_mag = 0.5 * (log_factorial(2 * l) - log_factorial(l + m) - log_factorial(l - m));
    p.times_power(c, l + pm * m);
    p.times_power(-pm * s, l - pm * m);
  }
  return p.value();
}

Complex wigner_D(int l, int m, int mp, const EulerAngles& e) {
  const double d = wigner_d_direct(l, m, mp, e.beta);
  return std::polar(1.0, -(m * e.alpha + mp * e.gamma)) * d;
}

RecurrenceCoefficients::RecurrenceCoefficients(OrderPair p, Bandwidth bw)
    : first_degree(min_degree(p)) {
  const int steps = bw.value() - 1 - first_degree;
  if (steps < 0) throw std::domain_error("order pair exceeds bandwidth");
  a.resize(steps);
  b.resize(steps);
  c.resize(steps);
  const double m2 = double(p.m) * p.m;
  const double mp2 = double(p.mp) * p.mp;
  const double mmp = double(p.m) * p.mp;
  for (int i = 0; i < steps; ++i) {
    const double l = first_degree + i;
    const double l1 = l + 1.0;
    const double next_norm = std::sqrt((l1 * l1 - m2) * (l1 * l1 - mp2));
    a[i] = l1 * (2.0 * l + 1.0) / next_norm;
    c[i] = (l == 0.0) ? 0.0 : mmp / (l * l1);
    // Vanishes at the seed degree, where d(L-1) is taken as zero.
    b[i] = (i == 0) ? 0.0 : l1 * std::sqrt((l * l - m2) * (l * l - mp2)) / (l * next_norm);
  }
}

WignerColumn wigner_d_column(int m, int mp, double beta, Bandwidth bw) {
  const OrderPair p{m, mp};
  if (min_degree(p) >= bw.value())
    throw std::domain_error("wigner_d_column: orders exceed bandwidth");
  const RecurrenceCoefficients rc(p, bw);
  WignerColumn col{p, beta, {}};
  col.values.resize(static_cast<std::size_t>(bw.value() - rc.first_degree));
  const double cb = std::cos(beta);
  double prev = 0.0;
  double cur = wigner_d_seed(m, mp, beta);
  col.values[0] = cur;
  for (std::size_t i = 0; i < rc.a.size(); ++i) {
    const double next = rc.a[i] * (cb - rc.c[i]) * cur - rc.b[i] * prev;
    prev = cur;
    cur = next;
    col.values[i + 1] = cur;
  }
  return col;
}

WignerColumn apply_symmetry(const WignerColumn& col, Symmetry rel) {
  WignerColumn out{target(rel, col.orders),
                   reflects(rel) ? std::numbers::pi - col.beta : col.beta,
                   col.values};
  const int first = col.first_degree();
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] *= sign(rel, first + static_cast<int>(i), col.orders);
  return out;
}

}  // namespace so3
