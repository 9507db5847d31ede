#include "ncbtt/exactla/fp_kernels.hpp"

#include <cmath>

namespace ncbtt::exactla::fp {

namespace {

inline double reduce(double t, double p, double pinv) {
  double q = std::floor(t * pinv);
  double r = std::fma(-q, p, t);
  if (r < 0) r += p;
  if (r >= p) r -= p;
  return r;
}

}  // namespace

void axpy_scalar(double* y, const double* x, double a, std::size_t n, double p) {
  const double pinv = 1.0 / p;
  for (std::size_t i = 0; i < n; ++i) y[i] = reduce(std::fma(a, x[i], y[i]), p, pinv);
}

void scale_scalar(double* y, double a, std::size_t n, double p) {
  const double pinv = 1.0 / p;
  for (std::size_t i = 0; i < n; ++i) y[i] = reduce(a * y[i], p, pinv);
}

const Kernels& scalar_kernels() {
  static const Kernels k{"scalar", axpy_scalar, scale_scalar};
  return k;
}

const Kernels* avx2_kernels() {
#if defined(NCBTT_HAVE_AVX2_TU)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const Kernels k{"avx2", axpy_avx2, scale_avx2};
  return ok ? &k : nullptr;
#else
  return nullptr;
#endif
}

const Kernels& active_kernels() {
  static const Kernels& k = avx2_kernels() ? *avx2_kernels() : scalar_kernels();
  return k;
}

}  // namespace ncbtt::exactla::fp
