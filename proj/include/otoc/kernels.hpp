// Inner-loop kernels for the dense complex matrix type.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2
// variant chosen at runtime. Both variants perform the same multiplies and
// additions in the same order, so their outputs are bit-identical; the
// equivalence tests check exactly that.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace otoc::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

/// c[n x n] = a[n x n] * b[n x n], row-major. c must not alias a or b.
using MatmulFn = void (*)(const Complex* a, const Complex* b, Complex* c,
                          std::size_t n);

/// out[(na*nb) x (na*nb)] = a[na x na] (x) b[nb x nb], row-major.
using KronFn = void (*)(const Complex* a, std::size_t na, const Complex* b,
                        std::size_t nb, Complex* out);

namespace scalar {
void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n);
void kron(const Complex* a, std::size_t na, const Complex* b, std::size_t nb,
          Complex* out);
}  // namespace scalar

#if defined(OTOC_HAVE_AVX2_KERNELS)
namespace avx2 {
void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n);
void kron(const Complex* a, std::size_t na, const Complex* b, std::size_t nb,
          Complex* out);
}  // namespace avx2
#endif

/// True when the AVX2 variants are compiled in and the CPU supports them.
bool avx2_available() noexcept;

/// Backend currently used by matmul()/kron(). Picked once at startup: AVX2
/// when available, otherwise scalar.
Backend active_backend() noexcept;

/// Force a backend (tests, benchmarking). Returns false and leaves the
/// selection unchanged if the backend is unavailable.
bool select_backend(Backend backend) noexcept;

std::string_view backend_name(Backend backend) noexcept;

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n);
void kron(const Complex* a, std::size_t na, const Complex* b, std::size_t nb,
          Complex* out);

}  // namespace otoc::kernels
