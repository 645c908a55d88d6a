// otoclab: parameter sweeps, verification runs and k-classification tables
// for two-qubit OTOC / concurrence numerics.
//
// Exit status: 0 success, 1 verification failure, 2 invalid input,
// 3 I/O failure.

#include <cstdint>
#include <fstream>
#include <optional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otoc/analytic.hpp"
#include "otoc/engine.hpp"
#include "otoc/states.hpp"
#include "otoc/sweep.hpp"
#include "otoc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct SweepArgs {
  std::string family = "x";
  std::string w0 = "X";
  std::string v = "X";
  double jz = 1.0;
  double h_multiplier = 2.0;
  double t_start = 0.0;
  double t_end = 1.0;
  std::size_t steps = 65;
  std::string out;
  std::string format = "csv";
  // X state
  double a = 0.25, b = 0.25, c = 0.25, d = 0.25, w = 0.25, z = 0.25;
  // Bell family
  std::string variant = "phi_plus";
  double alpha = 1.0;
  // Werner
  double gamma = 0.5;
};

otoc::PauliLabel pauli_or_throw(const std::string& text, const char* flag) {
  if (auto p = otoc::parse_pauli(text)) return *p;
  throw otoc::InvalidStateError(std::string(flag) + ": expected X, Y or Z, got '" + text + "'");
}

otoc::StateFamily family_or_throw(const std::string& text) {
  if (auto f = otoc::parse_family(text)) return *f;
  throw otoc::InvalidStateError("--family: expected x, bell or werner, got '" + text + "'");
}

otoc::SweepSpec to_spec(const SweepArgs& args) {
  otoc::SweepSpec spec;
  switch (family_or_throw(args.family)) {
    case otoc::StateFamily::XState:
      spec.params = otoc::XStateParams{args.a, args.b, args.c, args.d, args.w, args.z};
      break;
    case otoc::StateFamily::Bell: {
      auto variant = otoc::parse_bell_variant(args.variant);
      if (!variant) throw otoc::InvalidStateError("--variant: unknown '" + args.variant + "'");
      spec.params = otoc::BellFamilyParams{*variant, args.alpha};
      break;
    }
    case otoc::StateFamily::Werner:
      spec.params = otoc::WernerParams{args.gamma};
      break;
  }
  spec.config = otoc::ScrambleConfig{pauli_or_throw(args.w0, "--w0"),
                                     pauli_or_throw(args.v, "--v"), args.jz, args.h_multiplier};
  spec.t_start = args.t_start;
  spec.t_end = args.t_end;
  spec.steps = args.steps;
  spec.output_path = args.out;
  if (args.format == "csv") spec.format = otoc::OutputFormat::Csv;
  else if (args.format == "json") spec.format = otoc::OutputFormat::Json;
  else throw otoc::InvalidStateError("--format: expected csv or json, got '" + args.format + "'");
  return spec;
}

void add_sweep_options(CLI::App& cmd, SweepArgs& args) {
  cmd.add_option("--family", args.family, "State family: x, bell, werner")->capture_default_str();
  cmd.add_option("--w0", args.w0, "Pauli W(0) on qubit 1: X, Y, Z")->capture_default_str();
  cmd.add_option("--v", args.v, "Pauli V on qubit 1: X, Y, Z")->capture_default_str();
  cmd.add_option("--jz", args.jz, "Ising coupling")->capture_default_str();
  cmd.add_option("--h-multiplier", args.h_multiplier, "H = -jz * m * (sz sz)")
      ->capture_default_str();
  cmd.add_option("--t-start", args.t_start)->capture_default_str();
  cmd.add_option("--t-end", args.t_end)->capture_default_str();
  cmd.add_option("--steps", args.steps, "Rows, endpoints included")->capture_default_str();
  cmd.add_option("--out", args.out, "Output path (default stdout)");
  cmd.add_option("--format", args.format, "csv or json")->capture_default_str();
  cmd.add_option("--a", args.a)->capture_default_str()->group("X state");
  cmd.add_option("--b", args.b)->capture_default_str()->group("X state");
  cmd.add_option("--c", args.c)->capture_default_str()->group("X state");
  cmd.add_option("--d", args.d)->capture_default_str()->group("X state");
  cmd.add_option("--w", args.w, "|00><11| coherence")->capture_default_str()->group("X state");
  cmd.add_option("--z", args.z, "|01><10| coherence")->capture_default_str()->group("X state");
  cmd.add_option("--variant", args.variant, "phi_plus, phi_minus, psi_plus, psi_minus")
      ->capture_default_str()
      ->group("Bell family");
  cmd.add_option("--alpha", args.alpha)->capture_default_str()->group("Bell family");
  cmd.add_option("--gamma", args.gamma)->capture_default_str()->group("Werner");
}

// CLI11 only reads config files for the top-level app, so subcommand files
// are applied here: every key fills the matching option unless it was given
// on the command line.
void apply_config_file(CLI::App& cmd, const std::string& path) {
  if (path.empty()) return;
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigINI().from_file(path);
  } catch (const CLI::FileError& e) {
    throw otoc::IoError(e.what());
  }
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    CLI::Option* opt = cmd.get_option_no_throw("--" + item.name);
    if (opt == nullptr || item.name == "config") {
      throw otoc::InvalidStateError("config " + path + ": unknown key '" + item.name + "'");
    }
    if (opt->count() > 0) continue;
    opt->add_result(item.inputs);
    try {
      opt->run_callback();
    } catch (const CLI::ParseError& e) {
      throw otoc::InvalidStateError("config " + path + ": " + item.name + ": " + e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit OTOC, fidelity, Bures metric and concurrence laboratory"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  std::string sweep_config, verify_config, table_config;
  constexpr const char* kConfigHelp = "key = value file; flags given on the command line win";
  auto* sweep = app.add_subcommand("sweep", "Evaluate the engine on a uniform time grid");
  sweep->add_option("--config", sweep_config, kConfigHelp);
  add_sweep_options(*sweep, sweep_args);

  double tolerance = 1e-8;
  std::uint64_t seed = 42;
  double verify_jz = 1.0;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run every property and oracle suite");
  verify->add_option("--config", verify_config, kConfigHelp);
  verify->add_option("--tolerance", tolerance, "Closed-form oracle tolerance")
      ->capture_default_str();
  verify->add_option("--seed", seed, "RNG seed for random draws")->capture_default_str();
  verify->add_option("--jz", verify_jz, "Ising coupling")->capture_default_str();
  verify->add_option("--out", verify_out, "Also write the JSON report to this path");

  std::string table_family = "bell";
  double table_jz = 1.0;
  double table_tolerance = 1e-8;
  std::optional<double> table_hm;
  auto* table = app.add_subcommand("table", "Empirical 3x3 k-classification grid");
  table->add_option("--config", table_config, kConfigHelp);
  table->add_option("--family", table_family, "x, bell, werner")->capture_default_str();
  table->add_option("--jz", table_jz)->capture_default_str();
  table->add_option("--tolerance", table_tolerance)->capture_default_str();
  table->add_option("--h-multiplier", table_hm, "Fix the multiplier instead of resolving it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    apply_config_file(*sweep, sweep_config);
    apply_config_file(*verify, verify_config);
    apply_config_file(*table, table_config);
    if (*sweep) {
      const otoc::SweepSpec spec = to_spec(sweep_args);
      const auto rows = otoc::run_sweep(spec);
      otoc::write_sweep(spec, rows, std::cout);
      return kExitOk;
    }
    if (*verify) {
      const auto report = otoc::run_verify(otoc::VerifyOptions{tolerance, seed, verify_jz});
      const std::string text = otoc::report_to_json(report);
      std::cout << text << '\n';
      if (!verify_out.empty()) {
        std::ofstream out(verify_out, std::ios::binary | std::ios::trunc);
        if (!(out << text << '\n')) throw otoc::IoError("cannot write '" + verify_out + "'");
      }
      if (!report.overall_pass()) {
        for (const auto& c : report.checks) {
          if (!c.pass) {
            std::cerr << "FAIL " << c.check << " family=" << c.family << " pair=" << c.pair
                      << " deviation=" << c.max_abs_deviation << " tolerance=" << c.tolerance
                      << " (" << c.detail << ")\n";
          }
        }
        return kExitVerifyFailed;
      }
      return kExitOk;
    }
    if (*table) {
      const auto family = family_or_throw(table_family);
      const auto params = otoc::default_table_params(family);
      const auto grid = otoc::oracle_time_grid(family, table_jz);
      const auto result =
          table_hm ? otoc::classify_empirically(params, table_jz, *table_hm, grid, table_tolerance)
                   : otoc::classify_with_resolved_multiplier(params, table_jz, table_tolerance);
      std::cout << otoc::table_to_text(result) << '\n' << otoc::table_to_json(result) << '\n';
      return kExitOk;
    }
  } catch (const otoc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const otoc::NumericConsistencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const otoc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
