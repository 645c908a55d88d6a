// Time sweeps of the engine with the classified closed-form k alongside,
// serialized as CSV or JSON.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "otoc/analytic.hpp"
#include "otoc/engine.hpp"

namespace otoc {

enum class OutputFormat { Csv, Json };

struct SweepSpec {
  StateFamilyParams params = XStateParams{0.25, 0.25, 0.25, 0.25, 0.25, 0.25};
  ScrambleConfig config;
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t steps = 65;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;
};

struct SweepRow {
  OtocSample sample;
  KClass k_class = KClass::KTilde;
  /// |closed form| at the family's phase; absent where the formula is
  /// degenerate.
  std::optional<double> k_analytic;
};

inline constexpr const char* kCsvHeader =
    "t,re_z,im_z,otoc,fidelity,bures,concurrence_m,k,k_analytic,k_class";

/// Throws InvalidStateError naming the violated invariant.
void validate(const SweepSpec& spec);

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Shortest form is not used: always 17 significant digits.
std::string format_double(double x);

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_json(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// Writes to spec.output_path, or to `fallback` when the path is empty.
/// Throws IoError when the file cannot be written.
void write_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& fallback);

}  // namespace otoc
