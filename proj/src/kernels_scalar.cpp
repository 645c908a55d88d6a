// Scalar reference kernels. The complex product is spelled out as
// (ar*br - ai*bi, ar*bi + ai*br) rather than using std::complex operator*,
// which matches what the vector kernels compute lane by lane.

#include "otoc/kernels.hpp"

namespace otoc::kernels::scalar {

namespace {

inline void mul_acc(const Complex& x, const Complex& y, double& re, double& im) {
  const double xr = x.real(), xi = x.imag();
  const double yr = y.real(), yi = y.imag();
  re += xr * yr - xi * yi;
  im += xr * yi + xi * yr;
}

}  // namespace

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double re = 0.0, im = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        mul_acc(a[i * n + k], b[k * n + j], re, im);
      }
      c[i * n + j] = Complex(re, im);
    }
  }
}

void kron(const Complex* a, std::size_t na, const Complex* b, std::size_t nb,
          Complex* out) {
  const std::size_t n = na * nb;
  for (std::size_t ia = 0; ia < na; ++ia) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
      Complex* row = out + (ia * nb + ib) * n;
      for (std::size_t ja = 0; ja < na; ++ja) {
        const double ar = a[ia * na + ja].real(), ai = a[ia * na + ja].imag();
        for (std::size_t jb = 0; jb < nb; ++jb) {
          const double br = b[ib * nb + jb].real(), bi = b[ib * nb + jb].imag();
          row[ja * nb + jb] = Complex(ar * br - ai * bi, ar * bi + ai * br);
        }
      }
    }
  }
}

}  // namespace otoc::kernels::scalar
