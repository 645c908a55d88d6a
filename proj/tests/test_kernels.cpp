#include <random>
#include <vector>

#include "doctest.h"
#include "otoc/kernels.hpp"
#include "otoc/linalg.hpp"

using namespace otoc;
namespace k = otoc::kernels;

namespace {

std::vector<Complex> random_buffer(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> v(n);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("scalar matmul matches definition") {
  std::mt19937_64 rng(1);
  const auto a = random_buffer(rng, 9), b = random_buffer(rng, 9);
  std::vector<Complex> c(9);
  k::scalar::matmul(a.data(), b.data(), c.data(), 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Complex s = 0.0;
      for (std::size_t l = 0; l < 3; ++l) s += a[i * 3 + l] * b[l * 3 + j];
      CHECK(std::abs(s - c[i * 3 + j]) < 1e-13);
    }
}

#if defined(OTOC_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 kernels are bit-identical to scalar") {
  if (!k::avx2_available()) {
    MESSAGE("CPU lacks AVX2; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 17; ++n) {
    const auto a = random_buffer(rng, n * n), b = random_buffer(rng, n * n);
    std::vector<Complex> cs(n * n), cv(n * n);
    k::scalar::matmul(a.data(), b.data(), cs.data(), n);
    k::avx2::matmul(a.data(), b.data(), cv.data(), n);
    CHECK_MESSAGE(cs == cv, "matmul n=" << n);
  }
  for (std::size_t na = 1; na <= 5; ++na)
    for (std::size_t nb = 1; nb <= 5; ++nb) {
      const auto a = random_buffer(rng, na * na), b = random_buffer(rng, nb * nb);
      const std::size_t n = na * nb;
      std::vector<Complex> os(n * n), ov(n * n);
      k::scalar::kron(a.data(), na, b.data(), nb, os.data());
      k::avx2::kron(a.data(), na, b.data(), nb, ov.data());
      CHECK_MESSAGE(os == ov, "kron na=" << na << " nb=" << nb);
    }
}
#endif

TEST_CASE("backend selection") {
  const k::Backend initial = k::active_backend();
  CHECK(k::select_backend(k::Backend::Scalar));
  CHECK(k::active_backend() == k::Backend::Scalar);
  std::mt19937_64 rng(3);
  ComplexMatrix a(4, random_buffer(rng, 16)), b(4, random_buffer(rng, 16));
  const ComplexMatrix scalar_product = matmul(a, b);
  if (k::select_backend(k::Backend::Avx2)) {
    CHECK(k::active_backend() == k::Backend::Avx2);
    CHECK(matmul(a, b) == scalar_product);
  } else {
    CHECK_FALSE(k::avx2_available());
  }
  k::select_backend(initial);
  CHECK(k::backend_name(k::Backend::Scalar) == "scalar");
}
