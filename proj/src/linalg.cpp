#include "otoc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "otoc/kernels.hpp"

namespace otoc {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(std::span<const Complex> values, const char* what) {
  if (!std::all_of(values.begin(), values.end(), finite)) {
    throw InvalidStateError(std::string(what) + ": non-finite entry");
  }
}

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError(std::string(op) + ": dimension mismatch (" +
                                 std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()) + ")");
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw DimensionMismatchError("ComplexMatrix: expected " + std::to_string(dim_ * dim_) +
                                 " entries, got " + std::to_string(data_.size()));
  }
  require_finite(data_, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw DimensionMismatchError("ComplexMatrix: ragged rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  require_finite(data_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  require_finite(diag, "ComplexMatrix::diagonal");
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  require_finite(amps_, "StateVector");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& z : amps_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "matmul");
  ComplexMatrix c(a.dim());
  if (c.dim() == 0) return c;
  kernels::matmul(a.entries().data(), b.entries().data(), &c(0, 0), a.dim());
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim() * b.dim());
  if (out.dim() == 0) return out;
  kernels::kron(a.entries().data(), a.dim(), b.entries().data(), b.dim(), &out(0, 0));
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix conjugate_entrywise(const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(i, j));
  return r;
}

Complex trace(const ComplexMatrix& a) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "add");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) += b(i, j);
  return r;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "subtract");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) -= b(i, j);
  return r;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex factor) {
  if (!finite(factor)) throw InvalidStateError("scale: non-finite factor");
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) *= factor;
  return r;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    worst = std::max(worst, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return worst;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  return max_abs_diff(matmul(adjoint(a), a), ComplexMatrix::identity(a.dim())) <= tol;
}

bool is_diagonal(const ComplexMatrix& a, double tol) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j && std::abs(a(i, j)) > tol) return false;
  return true;
}

ComplexMatrix exp_diag_hermitian(const ComplexMatrix& h, Complex scale) {
  if (!is_diagonal(h, kDiagonalTolerance)) {
    throw NotDiagonalError("exp_diag_hermitian: off-diagonal entry exceeds tolerance");
  }
  ComplexMatrix r(h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) {
    if (std::abs(h(i, i).imag()) > kDiagonalTolerance) {
      throw NotDiagonalError("exp_diag_hermitian: diagonal entry is not real");
    }
    r(i, i) = std::exp(scale * h(i, i).real());
  }
  return r;
}

ComplexMatrix partial_trace_B(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.dim() != dim_a * dim_b) {
    throw DimensionMismatchError("partial_trace_B: " + std::to_string(m.dim()) +
                                 " != " + std::to_string(dim_a) + "*" + std::to_string(dim_b));
  }
  ComplexMatrix r(dim_a);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_a; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < dim_b; ++k) s += m(i * dim_b + k, j * dim_b + k);
      r(i, j) = s;
    }
  return r;
}

ComplexMatrix outer_product(const StateVector& u, const StateVector& v) {
  if (u.size() != v.size()) throw DimensionMismatchError("outer_product: size mismatch");
  ComplexMatrix r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r(i, j) = u[i] * std::conj(v[j]);
  return r;
}

StateVector apply(const ComplexMatrix& a, const StateVector& x) {
  if (a.dim() != x.size()) throw DimensionMismatchError("apply: size mismatch");
  std::vector<Complex> y(x.size());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Complex s = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * x[k];
    y[i] = s;
  }
  return StateVector(std::move(y));
}

Complex inner_product(const StateVector& u, const StateVector& v) {
  if (u.size() != v.size()) throw DimensionMismatchError("inner_product: size mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

StateVector conjugate_entrywise(const StateVector& v) {
  std::vector<Complex> c(v.amplitudes().begin(), v.amplitudes().end());
  for (auto& z : c) z = std::conj(z);
  return StateVector(std::move(c));
}

}  // namespace otoc
