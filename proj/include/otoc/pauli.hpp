#pragma once

#include <optional>
#include <string_view>

#include "otoc/linalg.hpp"

namespace otoc {

enum class PauliLabel { X, Y, Z };

inline constexpr PauliLabel kAllPaulis[] = {PauliLabel::X, PauliLabel::Y, PauliLabel::Z};

/// 2x2 Pauli matrix.
const ComplexMatrix& pauli(PauliLabel label);

/// sigma (x) I2, a Pauli acting on the first qubit.
const ComplexMatrix& pauli_on_first(PauliLabel label);

/// sigma_y (x) sigma_y
const ComplexMatrix& spin_flip();

std::string_view to_string(PauliLabel label) noexcept;
/// Accepts "X"/"x"/"sx"/"sigma_x" and the same for Y, Z.
std::optional<PauliLabel> parse_pauli(std::string_view text) noexcept;

}  // namespace otoc
