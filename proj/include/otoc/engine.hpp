// Brute-force OTOC engine for two qubits under the diagonal Ising
// Hamiltonian H = -jz * hMultiplier * (sz (x) sz).
//
// W(t) = e^{iHt} W(0) e^{-iHt} is computed by exact conjugation with the
// diagonal propagator. From M(t) = W(t) V W(t) V rho:
//   Z(t)       = Tr M(t)
//   <C(t)>     = 2 (1 - Re Z)
//   f(t)       = |Z|^2
//   D(t)       = sqrt(2 (1 - sqrt f))
//   C_r(M(t))  = |Tr((sy sy) M(t))|
//   k          = C_r(M(t)) / |Z|

#pragma once

#include <optional>
#include <utility>

#include "otoc/linalg.hpp"
#include "otoc/pauli.hpp"
#include "otoc/states.hpp"

namespace otoc {

/// Below this |Tr M|, k is reported absent.
inline constexpr double kKThreshold = 1e-9;
/// |z|^2 may exceed 1 by at most this much before it is an error.
inline constexpr double kFidelityClampWindow = 1e-10;

struct ScrambleConfig {
  PauliLabel w0 = PauliLabel::X;
  PauliLabel v = PauliLabel::X;
  double jz = 1.0;
  double h_multiplier = 2.0;
};

/// Throws InvalidStateError when jz is not finite or h_multiplier <= 0.
void validate(const ScrambleConfig& cfg);

struct OtocSample {
  double t = 0.0;
  Complex z;
  double otoc = 0.0;
  double fidelity = 0.0;
  double bures = 0.0;
  double concurrence_m = 0.0;
  std::optional<double> k;
};

/// Operators for a general run: W(0), V and the propagator e^{iHt} at the
/// sample time. compute_sample builds these from a ScrambleConfig; the
/// general form exists so the whole problem can be rotated by a unitary.
struct ScrambleOperators {
  ComplexMatrix w0;
  ComplexMatrix v;
  ComplexMatrix propagator;
};

ComplexMatrix ising_hamiltonian(const ScrambleConfig& cfg);

/// e^{iHt}
ComplexMatrix propagator(const ScrambleConfig& cfg, double t);

ScrambleOperators scramble_operators(const ScrambleConfig& cfg, double t);

/// e^{iHt} (sigma_w0 (x) I) e^{-iHt}
ComplexMatrix evolve_operator(PauliLabel w0, const ScrambleConfig& cfg, double t);

/// W(t) V W(t) V rho. Generally not Hermitian.
ComplexMatrix butterfly_matrix(const ScrambleConfig& cfg, const DensityMatrix& rho, double t);
ComplexMatrix butterfly_matrix(const ScrambleOperators& ops, const ComplexMatrix& rho);

/// Full record at time t. Throws NumericConsistencyError if |z|^2 > 1 + 1e-10.
OtocSample compute_sample(const ScrambleConfig& cfg, const DensityMatrix& rho, double t);
OtocSample compute_sample(const ScrambleOperators& ops, const ComplexMatrix& rho, double t);

/// Builds the sample fields from M(t) alone.
OtocSample sample_from_butterfly(const ComplexMatrix& m, double t);

/// <Psi| (W V W V (x) I_B) |Psi> with |Psi> = purify(rho).
Complex z_via_purification(const ScrambleConfig& cfg, const DensityMatrix& rho, double t);

/// (|x>, |y>) = (W(t) V |psi>, V W(t) |psi>) for a 4-dim pure state.
std::pair<PureState, PureState> forward_backward_states(const ScrambleConfig& cfg,
                                                        const PureState& psi, double t);

/// |Tr m - Tr((sy sy) m)|; zero when m has the spin-flip trace-invariant
/// structure.
double check_trace_invariant_form(const ComplexMatrix& m);

}  // namespace otoc
