#include "otoc/analytic.hpp"

#include <cmath>

namespace otoc {

namespace {

constexpr double kDenominatorFloor = 1e-12;

bool involves_z(PauliLabel w0, PauliLabel v) {
  return w0 == PauliLabel::Z || v == PauliLabel::Z;
}

void require_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidStateError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

std::string_view to_string(KClass cls) noexcept {
  switch (cls) {
    case KClass::LTilde: return "L_TILDE";
    case KClass::LDoubleTilde: return "L_DTILDE";
    case KClass::KTilde: return "K_TILDE";
    case KClass::MTilde: return "M_TILDE";
    case KClass::MDoubleTilde: return "M_DTILDE";
  }
  return "?";
}

std::optional<PhaseConvention> phase_convention(StateFamily family) noexcept {
  switch (family) {
    case StateFamily::XState: return PhaseConvention{family, 8.0};
    case StateFamily::Werner: return PhaseConvention{family, 4.0};
    case StateFamily::Bell: return std::nullopt;
  }
  return std::nullopt;
}

KClass classify_pair(StateFamily family, PauliLabel w0, PauliLabel v) noexcept {
  const bool constant = involves_z(w0, v);
  switch (family) {
    case StateFamily::XState: return constant ? KClass::LDoubleTilde : KClass::LTilde;
    case StateFamily::Werner: return constant ? KClass::MDoubleTilde : KClass::MTilde;
    case StateFamily::Bell: return KClass::KTilde;
  }
  return KClass::KTilde;
}

KClass printed_table_class(StateFamily family, PauliLabel /*w0*/, PauliLabel v) noexcept {
  // The printed tables split on the V column only.
  const bool constant = v == PauliLabel::Z;
  switch (family) {
    case StateFamily::XState: return constant ? KClass::LDoubleTilde : KClass::LTilde;
    case StateFamily::Werner: return constant ? KClass::MDoubleTilde : KClass::MTilde;
    case StateFamily::Bell: return KClass::KTilde;
  }
  return KClass::KTilde;
}

std::vector<KClass> family_classes(StateFamily family) {
  switch (family) {
    case StateFamily::XState: return {KClass::LTilde, KClass::LDoubleTilde};
    case StateFamily::Werner: return {KClass::MTilde, KClass::MDoubleTilde};
    case StateFamily::Bell: return {KClass::KTilde};
  }
  return {};
}

double l_tilde(const XStateParams& p, double phi) {
  const double c = std::cos(phi);
  const double outer = p.a + p.d, inner = p.b + p.c;
  const double num2 = p.w * p.w + p.z * p.z - 2.0 * p.w * p.z * c;
  const double den2 = inner * inner + outer * outer + 2.0 * inner * outer * c;
  if (!(den2 >= 0.0) || std::sqrt(den2) < kDenominatorFloor) {
    throw DegenerateParametersError("l_tilde: vanishing denominator");
  }
  return 2.0 * std::sqrt(std::max(0.0, num2)) / std::sqrt(den2);
}

double l_tilde_restricted(double a, double d, double phi) {
  if (a < 0.0 || d < 0.0 || a + d > 1.0 + kParamTolerance) {
    throw InvalidStateError("l_tilde_restricted: need a, d >= 0 and a + d <= 1");
  }
  XStateParams p;
  p.a = a;
  p.d = d;
  p.b = 1.0 - (a + d);
  p.c = 0.0;
  p.w = a;
  p.z = d;
  return l_tilde(p, phi);
}

double l_double_tilde(const XStateParams& p) { return 2.0 * (p.w - p.z); }

double k_tilde(double alpha) {
  require_unit_interval(alpha, "alpha");
  return 2.0 * alpha / (1.0 + alpha * alpha);
}

double m_tilde(double gamma, double phi) {
  require_unit_interval(gamma, "gamma");
  const double c = std::cos(phi), s = std::sin(phi);
  const double den2 = c * c + gamma * s * s;
  if (std::sqrt(den2) < kDenominatorFloor) {
    throw DegenerateParametersError("m_tilde: limit undefined (gamma = 0, cos(phi) = 0)");
  }
  return gamma / std::sqrt(den2);
}

double m_double_tilde(double gamma) {
  require_unit_interval(gamma, "gamma");
  return gamma;
}

double predict_concurrence_from_otoc(double k, double otoc, double im_z) {
  const double re = 1.0 - otoc / 2.0;
  return k * std::sqrt(re * re + im_z * im_z);
}

double predict_concurrence_from_bures(double k, double bures) {
  return k * (1.0 - bures * bures / 2.0);
}

double analytic_k(KClass cls, const StateFamilyParams& params, double phi) {
  switch (cls) {
    case KClass::LTilde:
      if (auto p = std::get_if<XStateParams>(&params)) return l_tilde(*p, phi);
      break;
    case KClass::LDoubleTilde:
      if (auto p = std::get_if<XStateParams>(&params)) return l_double_tilde(*p);
      break;
    case KClass::KTilde:
      if (auto p = std::get_if<BellFamilyParams>(&params)) return k_tilde(p->alpha);
      break;
    case KClass::MTilde:
      if (auto p = std::get_if<WernerParams>(&params)) return m_tilde(p->gamma, phi);
      break;
    case KClass::MDoubleTilde:
      if (auto p = std::get_if<WernerParams>(&params)) return m_double_tilde(p->gamma);
      break;
  }
  throw InvalidStateError(std::string("analytic_k: class ") + std::string(to_string(cls)) +
                          " does not apply to family " +
                          std::string(to_string(family_of(params))));
}

double analytic_k_magnitude(KClass cls, const StateFamilyParams& params, double phi) {
  return std::abs(analytic_k(cls, params, phi));
}

XStateParams case1_bound_state() noexcept {
  return XStateParams{0.25, 0.25, 0.25, 0.25, 0.25, 0.25};
}

Case2Family case2_bound_family(double a) {
  const double d = a - 0.5;
  if (d < -kParamTolerance) {
    throw InfeasibleConstraintsError("case 2: d = a - 1/2 = " + std::to_string(d) + " < 0");
  }
  const double fill = 1.0 - a - d;
  if (fill < -kParamTolerance) {
    throw InfeasibleConstraintsError("case 2: b + c = 1 - a - d = " + std::to_string(fill) +
                                     " < 0");
  }
  Case2Family out;
  out.params = XStateParams{a, fill / 2.0, fill / 2.0, std::max(d, 0.0), a, std::max(d, 0.0)};
  const auto& p = out.params;
  if (4.0 * a > 1.0 + kParamTolerance) out.violations.emplace_back("4a <= 1");
  if (std::abs((p.b + p.c) - (1.0 - 4.0 * a) / 2.0) > kParamTolerance) {
    out.violations.emplace_back("b + c = (1 - 4a)/2");
  }
  if (std::abs(p.w) > std::sqrt(p.a * p.d) + kParamTolerance) {
    out.violations.emplace_back("|w| <= sqrt(a d)");
  }
  if (std::abs(p.z) > std::sqrt(p.b * p.c) + kParamTolerance) {
    out.violations.emplace_back("|z| <= sqrt(b c)");
  }
  try {
    validate(p);
    out.psd_valid = true;
  } catch (const InvalidStateError&) {
    out.psd_valid = false;
  }
  return out;
}

}  // namespace otoc
