#include "otoc/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace otoc {

namespace {

const Complex I{0.0, 1.0};

const ComplexMatrix& sx() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}
const ComplexMatrix& sy() {
  static const ComplexMatrix m{{0.0, -I}, {I, 0.0}};
  return m;
}
const ComplexMatrix& sz() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

}  // namespace

const ComplexMatrix& pauli(PauliLabel label) {
  switch (label) {
    case PauliLabel::X: return sx();
    case PauliLabel::Y: return sy();
    case PauliLabel::Z: return sz();
  }
  return sz();
}

const ComplexMatrix& pauli_on_first(PauliLabel label) {
  static const ComplexMatrix x = kron(sx(), ComplexMatrix::identity(2));
  static const ComplexMatrix y = kron(sy(), ComplexMatrix::identity(2));
  static const ComplexMatrix z = kron(sz(), ComplexMatrix::identity(2));
  switch (label) {
    case PauliLabel::X: return x;
    case PauliLabel::Y: return y;
    case PauliLabel::Z: return z;
  }
  return z;
}

const ComplexMatrix& spin_flip() {
  static const ComplexMatrix m = kron(sy(), sy());
  return m;
}

std::string_view to_string(PauliLabel label) noexcept {
  switch (label) {
    case PauliLabel::X: return "X";
    case PauliLabel::Y: return "Y";
    case PauliLabel::Z: return "Z";
  }
  return "?";
}

std::optional<PauliLabel> parse_pauli(std::string_view text) noexcept {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (s.starts_with("sigma_")) s.erase(0, 6);
  else if (s.size() == 2 && s[0] == 's') s.erase(0, 1);
  if (s == "x") return PauliLabel::X;
  if (s == "y") return PauliLabel::Y;
  if (s == "z") return PauliLabel::Z;
  return std::nullopt;
}

}  // namespace otoc
