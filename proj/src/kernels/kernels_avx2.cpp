// AVX2 variants of the batch kernels. Compiled with -mavx2 in its own
// translation unit; only reached through the runtime dispatch when the CPU
// reports AVX2. Operation order mirrors kernels_detail.hpp exactly so the
// results are bitwise-identical to the scalar backend.

#include "trajoracle/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include "kernels_detail.hpp"

namespace trajoracle::kernels {

namespace {

inline __m256d clamp0(__m256d v) { return _mm256_max_pd(_mm256_setzero_pd(), v); }

inline __m256d abs_pd(__m256d v) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  return _mm256_and_pd(v, mask);
}

void case4_profile_avx2(const Case4ProfileParams& k, const double* p, double* f,
                        std::size_t n) {
  const __m256d r1sq = _mm256_set1_pd(k.r1 * k.r1);
  const __m256d r2sq = _mm256_set1_pd(k.r2 * k.r2);
  const __m256d k1 = _mm256_set1_pd(1.0 + 2.0 * k.x + k.y);
  const __m256d vy = _mm256_set1_pd(k.y);
  const __m256d dsq = _mm256_set1_pd(k.dist * k.dist);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vp = _mm256_loadu_pd(p + i);
    const __m256d a = _mm256_sqrt_pd(clamp0(_mm256_sub_pd(r1sq, _mm256_mul_pd(vp, vp))));
    const __m256d s = _mm256_mul_pd(a, k1);
    const __m256d half2 = _mm256_mul_pd(a, vy);
    const __m256d q =
        _mm256_sqrt_pd(clamp0(_mm256_sub_pd(r2sq, _mm256_mul_pd(half2, half2))));
    const __m256d w = k.same_side ? _mm256_sub_pd(vp, q) : _mm256_add_pd(vp, q);
    const __m256d val = _mm256_sub_pd(
        _mm256_add_pd(_mm256_mul_pd(s, s), _mm256_mul_pd(w, w)), dsq);
    _mm256_storeu_pd(f + i, val);
  }
  detail::case4_profile_scalar_n(k, p + i, f + i, n - i);
}

void oracle_row_avx2(const OracleRowParams& k, const double* c, double* err, std::size_t n) {
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  const __m256d zero = _mm256_setzero_pd();
  const __m256d no1 = _mm256_set1_pd(k.n_dot_c1);
  const __m256d no2 = _mm256_set1_pd(k.n_dot_c2);
  const __m256d uo1 = _mm256_set1_pd(k.u_dot_c1);
  const __m256d uo2 = _mm256_set1_pd(k.u_dot_c2);
  const __m256d r1sq = _mm256_set1_pd(k.r1 * k.r1);
  const __m256d r2sq = _mm256_set1_pd(k.r2 * k.r2);
  const __m256d vx = _mm256_set1_pd(k.x);
  const __m256d vy = _mm256_set1_pd(k.y);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vc = _mm256_loadu_pd(c + i);
    const __m256d p1 = _mm256_sub_pd(no1, vc);
    const __m256d p2 = _mm256_sub_pd(no2, vc);
    const __m256d a1sq = _mm256_sub_pd(r1sq, _mm256_mul_pd(p1, p1));
    const __m256d a2sq = _mm256_sub_pd(r2sq, _mm256_mul_pd(p2, p2));
    const __m256d a1 = _mm256_sqrt_pd(clamp0(a1sq));
    const __m256d a2 = _mm256_sqrt_pd(clamp0(a2sq));
    const __m256d ab = _mm256_add_pd(a1, a1);
    const __m256d gap_fwd =
        _mm256_sub_pd(_mm256_sub_pd(uo2, a2), _mm256_add_pd(uo1, a1));
    const __m256d gap_bwd =
        _mm256_sub_pd(_mm256_sub_pd(uo1, a1), _mm256_add_pd(uo2, a2));
    const __m256d y_hat = _mm256_div_pd(a2, a1);
    const __m256d ey = abs_pd(_mm256_sub_pd(y_hat, vy));
    const __m256d ef_raw = abs_pd(_mm256_sub_pd(_mm256_div_pd(gap_fwd, ab), vx));
    const __m256d eb_raw = abs_pd(_mm256_sub_pd(_mm256_div_pd(gap_bwd, ab), vx));
    const __m256d ef = _mm256_max_pd(ey, ef_raw);
    const __m256d eb = _mm256_max_pd(ey, eb_raw);
    const __m256d best = _mm256_min_pd(eb, ef);
    const __m256d feasible = _mm256_and_pd(_mm256_cmp_pd(a1sq, zero, _CMP_GT_OQ),
                                           _mm256_cmp_pd(a2sq, zero, _CMP_GE_OQ));
    _mm256_storeu_pd(err + i, _mm256_blendv_pd(inf, best, feasible));
  }
  detail::oracle_row_scalar_n(k, c + i, err + i, n - i);
}

}  // namespace

const Backend* avx2_backend() {
#if defined(__GNUC__) || defined(__clang__)
  if (!__builtin_cpu_supports("avx2")) return nullptr;
#endif
  static const Backend backend{"avx2", &case4_profile_avx2, &oracle_row_avx2};
  return &backend;
}

}  // namespace trajoracle::kernels

#else

namespace trajoracle::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace trajoracle::kernels

#endif
