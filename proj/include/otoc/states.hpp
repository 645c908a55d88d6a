// Two-qubit state families: symmetric X states, non-maximally entangled
// Bell states, Werner states. Plus purification and two concurrences (the
// general Wootters formula and the spin-flip trace for real states).

#pragma once

#include <array>
#include <string_view>
#include <optional>
#include <variant>

#include "otoc/linalg.hpp"

namespace otoc {

/// Tolerance on the smallest eigenvalue of a density matrix.
inline constexpr double kPsdTolerance = 1e-9;
/// Tolerance on family parameter constraints (trace, coherence bounds).
inline constexpr double kParamTolerance = 1e-12;

/// Validated 4x4 density matrix: Hermitian and unit trace to 1e-10, smallest
/// eigenvalue >= -1e-9.
class DensityMatrix {
 public:
  /// Throws InvalidStateError naming the violated invariant.
  explicit DensityMatrix(ComplexMatrix mat);

  const ComplexMatrix& matrix() const noexcept { return mat_; }

 private:
  ComplexMatrix mat_;
};

/// Unit-norm column vector of length 4 or 16.
class PureState {
 public:
  explicit PureState(StateVector vec);

  const StateVector& vector() const noexcept { return vec_; }
  std::size_t size() const noexcept { return vec_.size(); }
  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  StateVector vec_;
};

struct XStateParams {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;  // populations
  double w = 0.0;                             // |00><11| coherence
  double z = 0.0;                             // |01><10| coherence
};

enum class BellVariant { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

struct BellFamilyParams {
  BellVariant variant = BellVariant::PhiPlus;
  double alpha = 1.0;
};

struct WernerParams {
  double gamma = 0.0;
};

enum class StateFamily { XState, Bell, Werner };

using StateFamilyParams = std::variant<XStateParams, BellFamilyParams, WernerParams>;

StateFamily family_of(const StateFamilyParams& params) noexcept;
std::string_view to_string(StateFamily family) noexcept;
std::optional<StateFamily> parse_family(std::string_view text) noexcept;
std::string_view to_string(BellVariant variant) noexcept;
std::optional<BellVariant> parse_bell_variant(std::string_view text) noexcept;

/// Throws InvalidStateError if the parameters violate trace or PSD bounds.
void validate(const XStateParams& p);
void validate(const BellFamilyParams& p);
void validate(const WernerParams& p);

DensityMatrix make_x_state(const XStateParams& p);
PureState make_nonmax_bell(const BellFamilyParams& p);
DensityMatrix make_werner(const WernerParams& p);

/// Density matrix of any family member (Bell states as projectors).
DensityMatrix make_state(const StateFamilyParams& params);

/// Eigenvalues (ascending) of a Hermitian matrix.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Eigenpairs of rho with eigenvalue above 16 eps * max(1, p_max); the rest
/// are rounding noise around zero and are dropped.
struct SignificantEigenpair {
  double p;
  StateVector vec;
};
std::vector<SignificantEigenpair> significant_eigenpairs(const ComplexMatrix& rho);

/// 16-dim |Psi> = sum_i sqrt(p_i) |psi_i>|e_i> with e_i the computational
/// basis of the ancilla; partial_trace_B(|Psi><Psi|, 4, 4) recovers rho.
PureState purify(const DensityMatrix& rho);

/// max(0, l1 - l2 - l3 - l4) with l_i the decreasing square roots of the
/// eigenvalues of rho (sy sy) rho* (sy sy).
double wootters_concurrence(const DensityMatrix& rho);

/// |Tr((sy (x) sy) m)|. m need not be Hermitian.
double flip_concurrence(const ComplexMatrix& m);

}  // namespace otoc
