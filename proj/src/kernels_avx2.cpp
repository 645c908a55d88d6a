// AVX2 kernels. A __m256d holds two interleaved complex doubles
// (re0, im0, re1, im1). A complex multiply by a broadcast scalar x is
//   addsub(xr * y, xi * swap(y))
// whose even lanes are xr*yr - xi*yi and odd lanes xr*yi + xi*yr, the same
// operations as the scalar reference. No FMA: fused rounding would break
// bit-equality with the reference.

#include <immintrin.h>

#include "otoc/kernels.hpp"

namespace otoc::kernels::avx2 {

namespace {

inline __m256d cmul_bcast(double xr, double xi, __m256d y) {
  const __m256d t1 = _mm256_mul_pd(_mm256_set1_pd(xr), y);
  const __m256d ysw = _mm256_permute_pd(y, 0b0101);
  const __m256d t2 = _mm256_mul_pd(_mm256_set1_pd(xi), ysw);
  return _mm256_addsub_pd(t1, t2);
}

inline const double* as_doubles(const Complex* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(Complex* p) { return reinterpret_cast<double*>(p); }

}  // namespace

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  const std::size_t paired = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n; ++i) {
    const Complex* arow = a + i * n;
    for (std::size_t j = 0; j < paired; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t k = 0; k < n; ++k) {
        const __m256d bk = _mm256_loadu_pd(as_doubles(b + k * n + j));
        acc = _mm256_add_pd(acc, cmul_bcast(arow[k].real(), arow[k].imag(), bk));
      }
      _mm256_storeu_pd(as_doubles(c + i * n + j), acc);
    }
    if (paired != n) {
      const std::size_t j = n - 1;
      double re = 0.0, im = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double xr = arow[k].real(), xi = arow[k].imag();
        const double yr = b[k * n + j].real(), yi = b[k * n + j].imag();
        re += xr * yr - xi * yi;
        im += xr * yi + xi * yr;
      }
      c[i * n + j] = Complex(re, im);
    }
  }
}

void kron(const Complex* a, std::size_t na, const Complex* b, std::size_t nb,
          Complex* out) {
  const std::size_t n = na * nb;
  const std::size_t paired = nb & ~std::size_t{1};
  for (std::size_t ia = 0; ia < na; ++ia) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
      Complex* row = out + (ia * nb + ib) * n;
      const Complex* brow = b + ib * nb;
      for (std::size_t ja = 0; ja < na; ++ja) {
        const double ar = a[ia * na + ja].real(), ai = a[ia * na + ja].imag();
        Complex* dst = row + ja * nb;
        for (std::size_t jb = 0; jb < paired; jb += 2) {
          const __m256d y = _mm256_loadu_pd(as_doubles(brow + jb));
          _mm256_storeu_pd(as_doubles(dst + jb), cmul_bcast(ar, ai, y));
        }
        if (paired != nb) {
          const double br = brow[nb - 1].real(), bi = brow[nb - 1].imag();
          dst[nb - 1] = Complex(ar * br - ai * bi, ar * bi + ai * br);
        }
      }
    }
  }
}

}  // namespace otoc::kernels::avx2
