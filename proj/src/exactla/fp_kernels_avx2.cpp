#include "ncbtt/exactla/fp_kernels.hpp"

#if defined(NCBTT_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>

namespace ncbtt::exactla::fp {

namespace {

inline __m256d reduce4(__m256d t, __m256d p, __m256d pinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(t, pinv));
  __m256d r = _mm256_fnmadd_pd(q, p, t);
  __m256d neg = _mm256_cmp_pd(r, _mm256_setzero_pd(), _CMP_LT_OQ);
  r = _mm256_add_pd(r, _mm256_and_pd(neg, p));
  __m256d big = _mm256_cmp_pd(r, p, _CMP_GE_OQ);
  return _mm256_sub_pd(r, _mm256_and_pd(big, p));
}

inline double reduce1(double t, double p, double pinv) {
  double q = std::floor(t * pinv);
  double r = std::fma(-q, p, t);
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

}  // namespace

void axpy_avx2(double* y, const double* x, double a, std::size_t n, double p) {
  const double pinv_s = 1.0 / p;
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv_s);
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    __m256d vx = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(y + i, reduce4(_mm256_fmadd_pd(va, vx, vy), vp, vpinv));
  }
  for (; i < n; ++i) y[i] = reduce1(std::fma(a, x[i], y[i]), p, pinv_s);
}

void scale_avx2(double* y, double a, std::size_t n, double p) {
  const double pinv_s = 1.0 / p;
  const __m256d vp = _mm256_set1_pd(p);
  const __m256d vpinv = _mm256_set1_pd(pinv_s);
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, reduce4(_mm256_mul_pd(va, vy), vp, vpinv));
  }
  for (; i < n; ++i) y[i] = reduce1(a * y[i], p, pinv_s);
}

}  // namespace ncbtt::exactla::fp

#endif
