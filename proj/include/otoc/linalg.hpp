// Dense complex matrices for two-qubit operators and their purifications.
//
// Everything here is sized for 2x2 Paulis, 4x4 two-qubit operators and
// 16x16 / 16-vector purified objects, but nothing assumes those sizes.
// Storage is row-major; that order is also the serialization order.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "otoc/errors.hpp"

namespace otoc {

using Complex = std::complex<double>;

/// Default absolute tolerance for every approximate comparison.
inline constexpr double kDefaultTolerance = 1e-10;

/// Tolerance on off-diagonal magnitude / imaginary diagonal part accepted by
/// exp_diag_hermitian.
inline constexpr double kDiagonalTolerance = 1e-12;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given dimension.
  explicit ComplexMatrix(std::size_t dim);

  /// Row-major entries; `entries.size()` must equal dim*dim and every entry
  /// must be finite.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  /// Square matrix from nested rows, mostly for tests and constants.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Column vector; used for pure states in the 4-dim system space and the
/// 16-dim purified space.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<Complex> amplitudes);

  std::size_t size() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::vector<Complex> amps_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix conjugate_entrywise(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, Complex factor);

double frobenius_norm(const ComplexMatrix& a);
/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& a, double tol = kDefaultTolerance);
bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTolerance);
bool is_diagonal(const ComplexMatrix& a, double tol = kDefaultTolerance);

/// exp(scale * h) for a diagonal h with real diagonal. Exact per entry; no
/// series. Throws NotDiagonalError otherwise.
ComplexMatrix exp_diag_hermitian(const ComplexMatrix& h, Complex scale);

/// Trace out the second factor of a (dimA*dimB)-dimensional operator.
/// result[i,j] = sum_k m[i*dimB+k, j*dimB+k].
ComplexMatrix partial_trace_B(const ComplexMatrix& m, std::size_t dim_a,
                              std::size_t dim_b);

/// |u><v|
ComplexMatrix outer_product(const StateVector& u, const StateVector& v);
StateVector apply(const ComplexMatrix& a, const StateVector& x);
/// <u|v>, conjugate-linear in u.
Complex inner_product(const StateVector& u, const StateVector& v);
StateVector conjugate_entrywise(const StateVector& v);

}  // namespace otoc
