// Property and oracle suites run by `otoclab verify`, and the empirical
// k-classification grids behind `otoclab table`.
//
// Report JSON layout is documented in docs/report_schema.md.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "otoc/analytic.hpp"
#include "otoc/engine.hpp"

namespace otoc {

/// Multipliers tried, in order, when resolving which Hamiltonian
/// normalization makes the engine agree with a family's closed forms.
inline constexpr double kHMultiplierCandidates[] = {2.0, 1.0, 0.5, 4.0};

struct CheckRecord {
  std::string check;
  std::string family;  // "x", "bell", "werner" or "all"
  std::string pair;    // "XY" style, or "all"
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::optional<double> h_multiplier;
  std::string detail;
};

/// Informational record; never affects the overall verdict.
struct Finding {
  std::string name;
  std::string family;
  std::string pair;
  std::string note;
  std::map<std::string, double> values;
};

struct ClassificationCell {
  PauliLabel w0 = PauliLabel::X;
  PauliLabel v = PauliLabel::X;
  KClass body_text = KClass::KTilde;
  KClass printed_table = KClass::KTilde;
  /// Formula of the family whose magnitude matches the numeric k over the
  /// whole grid; nullopt if none does.
  std::optional<KClass> empirical;
  std::map<KClass, double> max_deviation;
  std::size_t samples_compared = 0;

  bool matches_body_text() const { return empirical == body_text; }
  bool matches_printed_table() const { return empirical == printed_table; }
};

struct ClassificationTable {
  StateFamily family = StateFamily::XState;
  StateFamilyParams params;
  double jz = 1.0;
  double h_multiplier = 1.0;
  double tolerance = 1e-8;
  std::vector<ClassificationCell> cells;  // row-major over (w0, v) in X, Y, Z order
};

/// Uniform time grid with both endpoints; steps == 1 yields {t_start}.
std::vector<double> time_grid(double t_start, double t_end, std::size_t steps);

/// Grid of 64 points covering one full period of the family's phase at the
/// given coupling (phi from 0 to 2 pi).
std::vector<double> oracle_time_grid(StateFamily family, double jz, std::size_t points = 64);

/// Documented default parameters used by `table`: all-1/4 X state,
/// Bell phi_plus with alpha = 1/2, Werner gamma = 1/2.
StateFamilyParams default_table_params(StateFamily family);

ClassificationTable classify_empirically(const StateFamilyParams& params, double jz,
                                         double h_multiplier, const std::vector<double>& t_grid,
                                         double tolerance);

/// Like classify_empirically, but picks the candidate multiplier that makes
/// the most cells agree with the body-text classification.
ClassificationTable classify_with_resolved_multiplier(const StateFamilyParams& params, double jz,
                                                      double tolerance);

// Random draws used by the suites.
XStateParams random_x_state(std::mt19937_64& rng);
WernerParams random_werner(std::mt19937_64& rng);
BellFamilyParams random_bell(std::mt19937_64& rng);
StateFamilyParams random_family_params(std::mt19937_64& rng);
PauliLabel random_pauli(std::mt19937_64& rng);
/// Haar-random unitary via Gram-Schmidt on a complex Gaussian matrix.
ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim);

struct VerifyOptions {
  double tolerance = 1e-8;
  std::uint64_t seed = 42;
  double jz = 1.0;
};

struct VerifyReport {
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::map<std::string, double> resolved_h_multiplier;
  std::vector<CheckRecord> checks;
  std::vector<Finding> findings;
  std::vector<ClassificationTable> classification;

  bool overall_pass() const;
};

VerifyReport run_verify(const VerifyOptions& options);

std::string report_to_json(const VerifyReport& report, int indent = 2);
std::string table_to_json(const ClassificationTable& table, int indent = 2);
std::string table_to_text(const ClassificationTable& table);

std::string pair_name(PauliLabel w0, PauliLabel v);

}  // namespace otoc
