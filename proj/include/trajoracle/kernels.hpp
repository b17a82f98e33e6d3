#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace trajoracle::kernels {

// Batch kernels for the two data-parallel inner loops: sampling the
// two-chord placement residual over an offset grid, and scanning candidate
// lines in the brute-force ratio search. Each kernel has a scalar reference
// implementation and may have SIMD variants; all variants of a kernel must
// produce bitwise-identical output for identical input (enforced by the
// equivalence tests), so callers may mix backends freely.

/// Inputs for the two-chord placement residual
///   a = sqrt(max(0, r1^2 - p^2))        half chord in circle 1
///   s = a * (1 + 2x + y)                distance between chord midpoints
///   q = sqrt(max(0, r2^2 - (a*y)^2))    center-2 offset to its chord
///   f = s^2 + (p -+ q)^2 - dist^2       (same_side picks p - q)
/// evaluated per offset p.
struct Case4ProfileParams {
  double r1 = 0.0;
  double r2 = 0.0;
  double x = 0.0;
  double y = 0.0;
  double dist = 0.0;
  bool same_side = true;
};

/// One grid row of the brute-force line scan: the line family
/// n·p = c with fixed normal n and direction u, swept over offsets c.
/// For each offset the kernel computes the segment-ratio mismatch
///   err = min over the two travel directions of
///         max(|gap/(2 a1) - x|, |a2/a1 - y|)
/// and +inf where the line misses either circle.
struct OracleRowParams {
  double n_dot_c1 = 0.0;
  double n_dot_c2 = 0.0;
  double u_dot_c1 = 0.0;
  double u_dot_c2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double x = 0.0;
  double y = 0.0;
};

using Case4ProfileFn = void (*)(const Case4ProfileParams&, const double* p, double* f,
                                std::size_t n);
using OracleRowFn = void (*)(const OracleRowParams&, const double* offsets, double* err,
                             std::size_t n);

struct Backend {
  const char* name;
  Case4ProfileFn case4_profile;
  OracleRowFn oracle_row;
};

/// Portable reference backend.
const Backend& scalar_backend() noexcept;

/// Best backend the running CPU supports, detected once.
const Backend& active_backend() noexcept;

/// All backends compiled in and usable on this CPU, scalar first.
std::vector<const Backend*> available_backends();

inline void case4_profile(const Case4ProfileParams& params, std::span<const double> p,
                          std::span<double> f) {
  active_backend().case4_profile(params, p.data(), f.data(), p.size());
}

inline void oracle_row(const OracleRowParams& params, std::span<const double> offsets,
                       std::span<double> err) {
  active_backend().oracle_row(params, offsets.data(), err.data(), offsets.size());
}

inline double case4_profile_at(const Case4ProfileParams& params, double p) {
  double f;
  scalar_backend().case4_profile(params, &p, &f, 1);
  return f;
}

inline double oracle_err_at(const OracleRowParams& params, double offset) {
  double err;
  scalar_backend().oracle_row(params, &offset, &err, 1);
  return err;
}

}  // namespace trajoracle::kernels
