#include <atomic>

#include "otoc/kernels.hpp"

namespace otoc::kernels {

namespace {

bool detect_avx2() noexcept {
#if defined(OTOC_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend default_backend() noexcept {
  return detect_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() noexcept {
  static std::atomic<Backend> backend{default_backend()};
  return backend;
}

}  // namespace

bool avx2_available() noexcept {
  static const bool available = detect_avx2();
  return available;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

bool select_backend(Backend backend) noexcept {
  if (backend == Backend::Avx2 && !avx2_available()) return false;
  current().store(backend, std::memory_order_relaxed);
  return true;
}

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
  }
  return "unknown";
}

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
#if defined(OTOC_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::Avx2) {
    avx2::matmul(a, b, c, n);
    return;
  }
#endif
  scalar::matmul(a, b, c, n);
}

void kron(const Complex* a, std::size_t na, const Complex* b, std::size_t nb,
          Complex* out) {
#if defined(OTOC_HAVE_AVX2_KERNELS)
  if (active_backend() == Backend::Avx2) {
    avx2::kron(a, na, b, nb, out);
    return;
  }
#endif
  scalar::kron(a, na, b, nb, out);
}

}  // namespace otoc::kernels
