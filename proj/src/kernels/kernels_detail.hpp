#pragma once

#include <cmath>
#include <limits>

#include "trajoracle/kernels.hpp"

namespace trajoracle::kernels::detail {

// Scalar element functions. Written to mirror the SIMD variants operation
// for operation (same clamp, same min/max argument order, no FMA) so that
// every backend produces bitwise-identical results.

inline double clamp0(double v) noexcept { return (0.0 > v) ? 0.0 : v; }

inline double case4_profile_elem(const Case4ProfileParams& k, double p) noexcept {
  const double a = std::sqrt(clamp0(k.r1 * k.r1 - p * p));
  const double s = a * (1.0 + 2.0 * k.x + k.y);
  const double half2 = a * k.y;
  const double q = std::sqrt(clamp0(k.r2 * k.r2 - half2 * half2));
  const double w = k.same_side ? (p - q) : (p + q);
  return s * s + w * w - k.dist * k.dist;
}

inline double oracle_row_elem(const OracleRowParams& k, double c) noexcept {
  const double inf = std::numeric_limits<double>::infinity();
  const double p1 = k.n_dot_c1 - c;
  const double p2 = k.n_dot_c2 - c;
  const double a1sq = k.r1 * k.r1 - p1 * p1;
  const double a2sq = k.r2 * k.r2 - p2 * p2;
  const double a1 = std::sqrt(clamp0(a1sq));
  const double a2 = std::sqrt(clamp0(a2sq));
  const double ab = a1 + a1;
  // Gap between chord intervals for the two travel directions.
  const double gap_fwd = (k.u_dot_c2 - a2) - (k.u_dot_c1 + a1);
  const double gap_bwd = (k.u_dot_c1 - a1) - (k.u_dot_c2 + a2);
  const double y_hat = a2 / a1;
  const double ey = std::fabs(y_hat - k.y);
  const double ef_raw = std::fabs(gap_fwd / ab - k.x);
  const double eb_raw = std::fabs(gap_bwd / ab - k.x);
  const double ef = (ef_raw > ey) ? ef_raw : ey;
  const double eb = (eb_raw > ey) ? eb_raw : ey;
  const double best = (ef > eb) ? eb : ef;
  const bool feasible = (a1sq > 0.0) && (a2sq >= 0.0);
  return feasible ? best : inf;
}

inline void case4_profile_scalar_n(const Case4ProfileParams& k, const double* p, double* f,
                                   std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) f[i] = case4_profile_elem(k, p[i]);
}

inline void oracle_row_scalar_n(const OracleRowParams& k, const double* c, double* err,
                                std::size_t n) noexcept {
  for (std::size_t i = 0; i < n; ++i) err[i] = oracle_row_elem(k, c[i]);
}

}  // namespace trajoracle::kernels::detail
