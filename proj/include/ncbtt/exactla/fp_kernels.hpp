#pragma once

#include <cstddef>

namespace ncbtt::exactla::fp {

// Residues mod p are held in doubles; p < 2^26 keeps every product exact.
//   axpy:  y[i] = (y[i] + a * x[i]) mod p
//   scale: y[i] = (a * y[i]) mod p
using AxpyFn = void (*)(double* y, const double* x, double a, std::size_t n, double p);
using ScaleFn = void (*)(double* y, double a, std::size_t n, double p);

struct Kernels {
  const char* name;
  AxpyFn axpy;
  ScaleFn scale;
};

const Kernels& scalar_kernels();
// nullptr when the CPU or the build lacks AVX2+FMA.
const Kernels* avx2_kernels();
// Best available variant, chosen once at first use.
const Kernels& active_kernels();

void axpy_scalar(double* y, const double* x, double a, std::size_t n, double p);
void scale_scalar(double* y, double a, std::size_t n, double p);

#if defined(NCBTT_HAVE_AVX2_TU)
void axpy_avx2(double* y, const double* x, double a, std::size_t n, double p);
void scale_avx2(double* y, double a, std::size_t n, double p);
#endif

}  // namespace ncbtt::exactla::fp
