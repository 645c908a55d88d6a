// Closed-form k parameters linking scrambling and concurrence per state
// family and operator pair, and the linear concurrence predictions built on
// them. These are the formulas the brute-force engine is checked against.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otoc/pauli.hpp"
#include "otoc/states.hpp"

namespace otoc {

enum class KClass { LTilde, LDoubleTilde, KTilde, MTilde, MDoubleTilde };

inline constexpr KClass kAllKClasses[] = {KClass::LTilde, KClass::LDoubleTilde, KClass::KTilde,
                                          KClass::MTilde, KClass::MDoubleTilde};

std::string_view to_string(KClass cls) noexcept;

/// phi = phi_per_jz_t * jz * t.
struct PhaseConvention {
  StateFamily family;
  double phi_per_jz_t;
};

/// 8 for X states, 4 for Werner; nullopt for the Bell family, whose k is
/// time independent.
std::optional<PhaseConvention> phase_convention(StateFamily family) noexcept;

/// Which closed form k takes for (family, W(0), V). Pairs with W(0) or V
/// equal to Z take the time-independent (double tilde) form.
KClass classify_pair(StateFamily family, PauliLabel w0, PauliLabel v) noexcept;

/// Classification of the published grids (split on V alone), kept for the
/// side-by-side comparison emitted by `table`.
KClass printed_table_class(StateFamily family, PauliLabel w0, PauliLabel v) noexcept;

/// KClasses that belong to a family.
std::vector<KClass> family_classes(StateFamily family);

double l_tilde(const XStateParams& p, double phi);
double l_tilde_restricted(double a, double d, double phi);
double l_double_tilde(const XStateParams& p);
double k_tilde(double alpha);
double m_tilde(double gamma, double phi);
double m_double_tilde(double gamma);

/// k * sqrt((1 - otoc/2)^2 + imZ^2)
double predict_concurrence_from_otoc(double k, double otoc, double im_z);
/// k * (1 - D^2/2)
double predict_concurrence_from_bures(double k, double bures);

/// Closed-form k for the given class evaluated on the family parameters at
/// phase phi. Signed exactly as the formula is written (2(w - z) may be
/// negative). Throws if the class does not belong to the family.
double analytic_k(KClass cls, const StateFamilyParams& params, double phi);

/// |analytic_k|, the value comparable to the engine's non-negative k.
double analytic_k_magnitude(KClass cls, const StateFamilyParams& params, double phi);

/// All-1/4 X state, l_tilde = 1 at cos(phi) = 0.
XStateParams case1_bound_state() noexcept;

struct Case2Family {
  XStateParams params;
  /// Conditions of the upper-bound construction that the parameters violate.
  std::vector<std::string> violations;
  bool psd_valid = false;
};

/// Upper-bound construction with a - d = 1/2 under the restriction w = a,
/// z = d and b = c filling the trace. Throws InfeasibleConstraintsError if a
/// population would be negative; otherwise reports every violated condition.
Case2Family case2_bound_family(double a);

}  // namespace otoc
