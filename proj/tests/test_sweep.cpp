#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "otoc/sweep.hpp"
#include "otoc/verify.hpp"

using namespace otoc;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string csv_of(const SweepSpec& spec) {
  std::ostringstream os;
  write_csv(os, run_sweep(spec));
  return os.str();
}

}  // namespace

TEST_CASE("time grid") {
  CHECK(time_grid(0.0, 1.0, 1) == std::vector<double>{0.0});
  const auto g = time_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 1.0);
  CHECK(g[2] == doctest::Approx(0.5));
}

TEST_CASE("format_double keeps 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(std::stod(format_double(std::numbers::pi)) == std::numbers::pi);
}

TEST_CASE("csv layout") {
  SweepSpec spec;
  spec.params = WernerParams{1.0};
  spec.config = {PauliLabel::X, PauliLabel::X, 1.0, 2.0};
  spec.t_start = 0.0;
  spec.t_end = std::numbers::pi;
  spec.steps = 65;
  const auto lines = split(csv_of(spec), '\n');
  REQUIRE(lines.size() == 67);  // header, 65 rows, trailing empty
  CHECK(lines[0] == kCsvHeader);
  for (std::size_t i = 1; i <= 65; ++i) {
    const auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == 10);
    CHECK(cols[9] == "M_TILDE");
    // gamma = 1 makes every closed form 1
    CHECK(std::stod(cols[7]) == doctest::Approx(std::stod(cols[8])).epsilon(1e-9));
  }
}

TEST_CASE("single point sweep") {
  SweepSpec spec;
  spec.steps = 1;
  spec.t_start = spec.t_end = 0.0;
  spec.config = {PauliLabel::Y, PauliLabel::Y, 1.0, 2.0};
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].sample.otoc == 0.0);
  CHECK(rows[0].sample.fidelity == 1.0);
}

TEST_CASE("absent k serializes as an empty field") {
  SweepSpec spec;
  spec.params = WernerParams{0.0};
  spec.config = {PauliLabel::X, PauliLabel::X, 1.0, 1.0};
  spec.steps = 1;
  spec.t_start = spec.t_end = std::numbers::pi / 8.0;  // Z = cos(4t)... vanishes here
  const auto rows = run_sweep(spec);
  REQUIRE(rows.size() == 1);
  CHECK(std::abs(rows[0].sample.z) < 1e-9);
  CHECK_FALSE(rows[0].sample.k.has_value());
  const auto cols = split(split(csv_of(spec), '\n')[1], ',');
  CHECK(cols[7].empty());
  CHECK(cols[8].empty());  // m_tilde degenerate at gamma = 0, cos(phi) = 0
}

TEST_CASE("case 1 peak in a sweep") {
  SweepSpec spec;
  spec.params = case1_bound_state();
  spec.config = {PauliLabel::X, PauliLabel::X, 1.0, 1.0};
  spec.t_start = 0.0;
  spec.t_end = std::numbers::pi / 8.0;
  spec.steps = 3;  // middle point cos(8t) = 0
  const auto rows = run_sweep(spec);
  REQUIRE(rows[1].sample.k);
  CHECK(*rows[1].sample.k == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*rows[1].k_analytic == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sweep validation") {
  SweepSpec spec;
  spec.steps = 0;
  CHECK_THROWS_AS(run_sweep(spec), InvalidStateError);
  spec.steps = 3;
  spec.t_start = 2.0;
  CHECK_THROWS_AS(run_sweep(spec), InvalidStateError);
  spec.t_start = 0.0;
  spec.params = XStateParams{0.5, 0.5, 0.5, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(run_sweep(spec), InvalidStateError);
}

TEST_CASE("deterministic output") {
  SweepSpec spec;
  spec.params = BellFamilyParams{BellVariant::PsiPlus, 0.3};
  spec.config = {PauliLabel::Y, PauliLabel::Z, 0.7, 2.0};
  spec.t_end = 4.0;
  spec.steps = 101;
  CHECK(csv_of(spec) == csv_of(spec));
}

TEST_CASE("json sweep") {
  SweepSpec spec;
  spec.steps = 4;
  std::ostringstream os;
  write_json(os, spec, run_sweep(spec));
  const auto j = nlohmann::json::parse(os.str());
  CHECK(j["family"] == "x");
  CHECK(j["samples"].size() == 4);
  CHECK(j["samples"][0].contains("k_class"));
}

TEST_CASE("unwritable output path") {
  SweepSpec spec;
  spec.steps = 2;
  spec.output_path = "/nonexistent-dir/out.csv";
  std::ostringstream fallback;
  CHECK_THROWS_AS(write_sweep(spec, run_sweep(spec), fallback), IoError);
}
