#include "otoc/engine.hpp"

#include <cmath>
#include <string>

namespace otoc {


void validate(const ScrambleConfig& cfg) {
  if (!std::isfinite(cfg.jz)) throw InvalidStateError("ScrambleConfig: jz must be finite");
  if (!(cfg.h_multiplier > 0.0) || !std::isfinite(cfg.h_multiplier)) {
    throw InvalidStateError("ScrambleConfig: h_multiplier must be > 0");
  }
}

ComplexMatrix ising_hamiltonian(const ScrambleConfig& cfg) {
  validate(cfg);
  return scale(kron(pauli(PauliLabel::Z), pauli(PauliLabel::Z)), -cfg.jz * cfg.h_multiplier);
}

ComplexMatrix propagator(const ScrambleConfig& cfg, double t) {
  return exp_diag_hermitian(ising_hamiltonian(cfg), Complex(0.0, t));
}

ScrambleOperators scramble_operators(const ScrambleConfig& cfg, double t) {
  return {pauli_on_first(cfg.w0), pauli_on_first(cfg.v), propagator(cfg, t)};
}

namespace {

ComplexMatrix evolve(const ComplexMatrix& w0, const ComplexMatrix& u) {
  return matmul(matmul(u, w0), adjoint(u));
}

ComplexMatrix wvwv(const ScrambleOperators& ops) {
  const ComplexMatrix wt = evolve(ops.w0, ops.propagator);
  const ComplexMatrix wv = matmul(wt, ops.v);
  return matmul(wv, wv);
}

}  // namespace

ComplexMatrix evolve_operator(PauliLabel w0, const ScrambleConfig& cfg, double t) {
  return evolve(pauli_on_first(w0), propagator(cfg, t));
}

ComplexMatrix butterfly_matrix(const ScrambleOperators& ops, const ComplexMatrix& rho) {
  return matmul(wvwv(ops), rho);
}

ComplexMatrix butterfly_matrix(const ScrambleConfig& cfg, const DensityMatrix& rho, double t) {
  return butterfly_matrix(scramble_operators(cfg, t), rho.matrix());
}

OtocSample sample_from_butterfly(const ComplexMatrix& m, double t) {
  OtocSample s;
  s.t = t;
  s.z = trace(m);
  s.otoc = 2.0 * (1.0 - s.z.real());
  double f = s.z.real() * s.z.real() + s.z.imag() * s.z.imag();
  if (f > 1.0 + kFidelityClampWindow) {
    throw NumericConsistencyError("fidelity " + std::to_string(f) +
                                  " exceeds 1; evolution is not unitary");
  }
  s.fidelity = std::min(f, 1.0);
  s.bures = std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(s.fidelity))));
  s.concurrence_m = flip_concurrence(m);
  const double modulus = std::abs(s.z);
  if (modulus > kKThreshold) s.k = s.concurrence_m / modulus;
  return s;
}

OtocSample compute_sample(const ScrambleOperators& ops, const ComplexMatrix& rho, double t) {
  const ComplexMatrix wt = evolve(ops.w0, ops.propagator);
  const ComplexMatrix wv = matmul(wt, ops.v);
  const ComplexMatrix vw = matmul(ops.v, wt);
  OtocSample s = sample_from_butterfly(matmul(matmul(wv, wv), rho), t);
  // Same D, but as sum_i p_i |B psi_i|^2 with B = WV - e^{i arg z} VW, which
  // equals 2 - 2|z| for unitary Hermitian W, V. The sqrt(1 - sqrt f) route
  // loses half the digits when |z| is near 1, and so does any route that
  // keeps rounding-level eigenvalues of rho.
  const double modulus = std::abs(s.z);
  const Complex phase = modulus > 0.0 ? s.z / modulus : Complex(1.0, 0.0);
  const ComplexMatrix b = subtract(wv, scale(vw, phase));
  double d2 = 0.0;
  for (const auto& [p, vec] : significant_eigenpairs(rho)) {
    const StateVector bv = apply(b, vec);
    d2 += p * bv.norm() * bv.norm();
  }
  s.bures = std::sqrt(d2);
  return s;
}

OtocSample compute_sample(const ScrambleConfig& cfg, const DensityMatrix& rho, double t) {
  return compute_sample(scramble_operators(cfg, t), rho.matrix(), t);
}

Complex z_via_purification(const ScrambleConfig& cfg, const DensityMatrix& rho, double t) {
  const PureState psi = purify(rho);
  const ComplexMatrix big = kron(wvwv(scramble_operators(cfg, t)), ComplexMatrix::identity(4));
  return inner_product(psi.vector(), apply(big, psi.vector()));
}

std::pair<PureState, PureState> forward_backward_states(const ScrambleConfig& cfg,
                                                        const PureState& psi, double t) {
  if (psi.size() != 4) throw DimensionMismatchError("forward_backward_states: expected 4-dim state");
  const ComplexMatrix wt = evolve_operator(cfg.w0, cfg, t);
  const ComplexMatrix& v = pauli_on_first(cfg.v);
  PureState x(apply(wt, apply(v, psi.vector())));
  PureState y(apply(v, apply(wt, psi.vector())));
  return {std::move(x), std::move(y)};
}

double check_trace_invariant_form(const ComplexMatrix& m) {
  if (m.dim() != 4) throw DimensionMismatchError("check_trace_invariant_form: expected 4x4");
  return std::abs(trace(m) - trace(matmul(spin_flip(), m)));
}

}  // namespace otoc
