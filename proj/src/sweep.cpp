#include "otoc/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "otoc/verify.hpp"

namespace otoc {

void validate(const SweepSpec& spec) {
  validate(spec.config);
  std::visit([](const auto& p) { validate(p); }, spec.params);
  if (!std::isfinite(spec.t_start) || !std::isfinite(spec.t_end)) {
    throw InvalidStateError("sweep: t_start and t_end must be finite");
  }
  if (spec.t_start > spec.t_end) throw InvalidStateError("sweep: t_start > t_end");
  if (spec.steps < 1) throw InvalidStateError("sweep: steps must be >= 1");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  const DensityMatrix rho = make_state(spec.params);
  const StateFamily family = family_of(spec.params);
  const KClass cls = classify_pair(family, spec.config.w0, spec.config.v);
  const auto conv = phase_convention(family);
  std::vector<SweepRow> rows;
  for (double t : time_grid(spec.t_start, spec.t_end, spec.steps)) {
    SweepRow row;
    row.sample = compute_sample(spec.config, rho, t);
    row.k_class = cls;
    const double phi = conv ? conv->phi_per_jz_t * spec.config.jz * t : 0.0;
    try {
      row.k_analytic = analytic_k_magnitude(cls, spec.params, phi);
    } catch (const DegenerateParametersError&) {
      row.k_analytic.reset();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) {
    const auto& s = r.sample;
    os << format_double(s.t) << ',' << format_double(s.z.real()) << ','
       << format_double(s.z.imag()) << ',' << format_double(s.otoc) << ','
       << format_double(s.fidelity) << ',' << format_double(s.bures) << ','
       << format_double(s.concurrence_m) << ',' << (s.k ? format_double(*s.k) : "") << ','
       << (r.k_analytic ? format_double(*r.k_analytic) : "") << ',' << to_string(r.k_class)
       << '\n';
  }
}

void write_json(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  using json = nlohmann::ordered_json;
  json j;
  j["family"] = std::string(to_string(family_of(spec.params)));
  j["w0"] = std::string(to_string(spec.config.w0));
  j["v"] = std::string(to_string(spec.config.v));
  j["jz"] = spec.config.jz;
  j["h_multiplier"] = spec.config.h_multiplier;
  j["t_start"] = spec.t_start;
  j["t_end"] = spec.t_end;
  j["steps"] = spec.steps;
  json samples = json::array();
  for (const auto& r : rows) {
    const auto& s = r.sample;
    json row;
    row["t"] = s.t;
    row["re_z"] = s.z.real();
    row["im_z"] = s.z.imag();
    row["otoc"] = s.otoc;
    row["fidelity"] = s.fidelity;
    row["bures"] = s.bures;
    row["concurrence_m"] = s.concurrence_m;
    row["k"] = s.k ? json(*s.k) : json(nullptr);
    row["k_analytic"] = r.k_analytic ? json(*r.k_analytic) : json(nullptr);
    row["k_class"] = std::string(to_string(r.k_class));
    samples.push_back(std::move(row));
  }
  j["samples"] = std::move(samples);
  os << j.dump(2) << '\n';
}

void write_sweep(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& fallback) {
  auto emit = [&](std::ostream& os) {
    if (spec.format == OutputFormat::Csv) write_csv(os, rows);
    else write_json(os, spec, rows);
  };
  if (spec.output_path.empty()) {
    emit(fallback);
    return;
  }
  std::ofstream out(spec.output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + spec.output_path + "' for writing");
  emit(out);
  out.flush();
  if (!out) throw IoError("failed writing '" + spec.output_path + "'");
}

}  // namespace otoc
