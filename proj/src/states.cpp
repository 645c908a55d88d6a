#include "otoc/states.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "otoc/pauli.hpp"

namespace otoc {

namespace {

using EigenMatrix = Eigen::MatrixXcd;

EigenMatrix to_eigen(const ComplexMatrix& m) {
  EigenMatrix e(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

Eigen::SelfAdjointEigenSolver<EigenMatrix> eigensolve(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<EigenMatrix> solver(to_eigen(h));
  if (solver.info() != Eigen::Success) {
    throw InvalidStateError("eigendecomposition failed");
  }
  return solver;
}

std::string fmt(double x) { return std::to_string(x); }

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
  if (mat_.dim() != 4) {
    throw InvalidStateError("DensityMatrix: expected 4x4, got dim " + std::to_string(mat_.dim()));
  }
  if (!is_hermitian(mat_, kDefaultTolerance)) {
    throw InvalidStateError("DensityMatrix: not Hermitian");
  }
  const Complex tr = trace(mat_);
  if (std::abs(tr - 1.0) > kDefaultTolerance) {
    throw InvalidStateError("DensityMatrix: trace " + fmt(tr.real()) + " != 1");
  }
  const double smallest = hermitian_eigenvalues(mat_).front();
  if (smallest < -kPsdTolerance) {
    throw InvalidStateError("DensityMatrix: not positive semidefinite (eigenvalue " +
                            fmt(smallest) + ")");
  }
}

PureState::PureState(StateVector vec) : vec_(std::move(vec)) {
  if (vec_.size() != 4 && vec_.size() != 16) {
    throw InvalidStateError("PureState: length must be 4 or 16");
  }
  if (std::abs(vec_.norm() - 1.0) > kDefaultTolerance) {
    throw InvalidStateError("PureState: norm " + fmt(vec_.norm()) + " != 1");
  }
}

ComplexMatrix PureState::projector() const { return outer_product(vec_, vec_); }

StateFamily family_of(const StateFamilyParams& params) noexcept {
  switch (params.index()) {
    case 0: return StateFamily::XState;
    case 1: return StateFamily::Bell;
    default: return StateFamily::Werner;
  }
}

std::string_view to_string(StateFamily family) noexcept {
  switch (family) {
    case StateFamily::XState: return "x";
    case StateFamily::Bell: return "bell";
    case StateFamily::Werner: return "werner";
  }
  return "?";
}

std::optional<StateFamily> parse_family(std::string_view text) noexcept {
  if (text == "x" || text == "x-state" || text == "x_state") return StateFamily::XState;
  if (text == "bell") return StateFamily::Bell;
  if (text == "werner") return StateFamily::Werner;
  return std::nullopt;
}

std::string_view to_string(BellVariant variant) noexcept {
  switch (variant) {
    case BellVariant::PhiPlus: return "phi_plus";
    case BellVariant::PhiMinus: return "phi_minus";
    case BellVariant::PsiPlus: return "psi_plus";
    case BellVariant::PsiMinus: return "psi_minus";
  }
  return "?";
}

std::optional<BellVariant> parse_bell_variant(std::string_view text) noexcept {
  for (auto v : {BellVariant::PhiPlus, BellVariant::PhiMinus, BellVariant::PsiPlus,
                 BellVariant::PsiMinus}) {
    if (text == to_string(v)) return v;
  }
  return std::nullopt;
}

void validate(const XStateParams& p) {
  for (double v : {p.a, p.b, p.c, p.d, p.w, p.z}) {
    if (!std::isfinite(v)) throw InvalidStateError("X state: non-finite parameter");
  }
  if (std::min({p.a, p.b, p.c, p.d}) < -kParamTolerance) {
    throw InvalidStateError("X state: negative population");
  }
  const double sum = p.a + p.b + p.c + p.d;
  if (std::abs(sum - 1.0) > kParamTolerance) {
    throw InvalidStateError("X state: a+b+c+d = " + fmt(sum) + " != 1");
  }
  if (std::abs(p.w) > std::sqrt(std::max(0.0, p.a * p.d)) + kParamTolerance) {
    throw InvalidStateError("X state: |w| > sqrt(a*d) (not positive semidefinite)");
  }
  if (std::abs(p.z) > std::sqrt(std::max(0.0, p.b * p.c)) + kParamTolerance) {
    throw InvalidStateError("X state: |z| > sqrt(b*c) (not positive semidefinite)");
  }
}

void validate(const BellFamilyParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) {
    throw InvalidStateError("Bell family: alpha must lie in [0, 1]");
  }
}

void validate(const WernerParams& p) {
  if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) {
    throw InvalidStateError("Werner: gamma must lie in [0, 1]");
  }
}

DensityMatrix make_x_state(const XStateParams& p) {
  validate(p);
  // clang-format off
  return DensityMatrix(ComplexMatrix{
      {p.a, 0.0, 0.0, p.w},
      {0.0, p.b, p.z, 0.0},
      {0.0, p.z, p.c, 0.0},
      {p.w, 0.0, 0.0, p.d}});
  // clang-format on
}

PureState make_nonmax_bell(const BellFamilyParams& p) {
  validate(p);
  const double n = 1.0 / std::sqrt(1.0 + p.alpha * p.alpha);
  const double a = p.alpha * n;
  std::vector<Complex> v(4, 0.0);
  switch (p.variant) {
    case BellVariant::PhiPlus: v[0] = n; v[3] = a; break;
    case BellVariant::PhiMinus: v[0] = a; v[3] = -n; break;
    case BellVariant::PsiPlus: v[1] = n; v[2] = a; break;
    case BellVariant::PsiMinus: v[1] = a; v[2] = -n; break;
  }
  return PureState(StateVector(std::move(v)));
}

DensityMatrix make_werner(const WernerParams& p) {
  validate(p);
  const double s = 1.0 / std::sqrt(2.0);
  const StateVector singlet({0.0, s, -s, 0.0});
  return DensityMatrix(add(scale(outer_product(singlet, singlet), p.gamma),
                           scale(ComplexMatrix::identity(4), (1.0 - p.gamma) / 4.0)));
}

DensityMatrix make_state(const StateFamilyParams& params) {
  return std::visit(
      [](const auto& p) -> DensityMatrix {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, XStateParams>) return make_x_state(p);
        else if constexpr (std::is_same_v<T, BellFamilyParams>)
          return DensityMatrix(make_nonmax_bell(p).projector());
        else return make_werner(p);
      },
      params);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const auto solver = eigensolve(h);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<SignificantEigenpair> significant_eigenpairs(const ComplexMatrix& rho) {
  const auto solver = eigensolve(rho);
  const auto& p = solver.eigenvalues();
  const EigenMatrix& vecs = solver.eigenvectors();
  const double cutoff =
      16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, p.maxCoeff());
  std::vector<SignificantEigenpair> out;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (!(p(i) > cutoff)) continue;
    std::vector<Complex> v(static_cast<std::size_t>(vecs.rows()));
    for (Eigen::Index r = 0; r < vecs.rows(); ++r) v[static_cast<std::size_t>(r)] = vecs(r, i);
    out.push_back({p(i), StateVector(std::move(v))});
  }
  return out;
}

PureState purify(const DensityMatrix& rho) {
  const auto solver = eigensolve(rho.matrix());
  const auto& p = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  std::vector<Complex> psi(16, 0.0);
  for (Eigen::Index i = 0; i < 4; ++i) {
    if (p(i) < -kPsdTolerance) {
      throw InvalidStateError("purify: negative eigenvalue " + fmt(p(i)));
    }
    const double weight = std::sqrt(std::max(0.0, p(i)));
    for (Eigen::Index s = 0; s < 4; ++s) {
      // |psi_i> (x) |e_i>: system index s, ancilla index i.
      psi[static_cast<std::size_t>(s * 4 + i)] += weight * vecs(s, i);
    }
  }
  StateVector v(std::move(psi));
  const double norm = v.norm();
  if (!(norm > 0.0)) throw InvalidStateError("purify: zero state");
  std::vector<Complex> normalized(v.amplitudes().begin(), v.amplitudes().end());
  for (auto& z : normalized) z /= norm;
  return PureState(StateVector(std::move(normalized)));
}

double wootters_concurrence(const DensityMatrix& rho) {
  // With rho = sum_i |v_i><v_i| (v_i = sqrt(p_i) psi_i), the l_i are the
  // singular values of tau_ij = <v_i| (sy sy) |v_j*>. Eigencomponents at
  // rounding level are dropped so rank-deficient states stay exact.
  const auto pairs = significant_eigenpairs(rho.matrix());
  if (pairs.empty()) return 0.0;
  EigenMatrix v(4, static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t c = 0; c < pairs.size(); ++c)
    for (Eigen::Index r = 0; r < 4; ++r)
      v(r, static_cast<Eigen::Index>(c)) =
          std::sqrt(pairs[c].p) * pairs[c].vec.amplitudes()[static_cast<std::size_t>(r)];
  const EigenMatrix tau = v.adjoint() * to_eigen(spin_flip()) * v.conjugate();
  Eigen::JacobiSVD<EigenMatrix> svd(tau);
  std::vector<double> lambda(4, 0.0);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    lambda[static_cast<std::size_t>(i)] = svd.singularValues()(i);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double flip_concurrence(const ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatchError("flip_concurrence: expected 4x4");
  return std::abs(trace(matmul(spin_flip(), m)));
}

}  // namespace otoc
