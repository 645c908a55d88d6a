#include "otoc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace otoc {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

std::string fam(StateFamily f) { return std::string(to_string(f)); }

/// Running maximum of a deviation plus sample count.
struct MaxDev {
  double value = 0.0;
  std::size_t count = 0;
  void add(double dev) {
    value = std::max(value, dev);
    ++count;
  }
};

CheckRecord make_record(std::string check, std::string family, std::string pair,
                        const MaxDev& dev, double tol, std::string detail = {}) {
  CheckRecord r;
  r.check = std::move(check);
  r.family = std::move(family);
  r.pair = std::move(pair);
  r.max_abs_deviation = dev.value;
  r.tolerance = tol;
  r.pass = dev.count > 0 && dev.value <= tol;
  r.detail = std::move(detail);
  if (r.detail.empty()) r.detail = "samples=" + std::to_string(dev.count);
  else r.detail += "; samples=" + std::to_string(dev.count);
  return r;
}

double phase(StateFamily family, double jz, double t) {
  const auto conv = phase_convention(family);
  return conv ? conv->phi_per_jz_t * jz * t : 0.0;
}

struct OracleStats {
  MaxDev dev;
  std::size_t absent = 0;
  std::size_t degenerate = 0;
  double k_min = std::numeric_limits<double>::infinity();
  double k_max = -std::numeric_limits<double>::infinity();
  double analytic_max = -std::numeric_limits<double>::infinity();
};

/// Numeric k against |closed form| for one state, pair and class over a grid.
void compare_oracle(const StateFamilyParams& params, const DensityMatrix& rho, KClass cls,
                    PauliLabel w0, PauliLabel v, double jz, double hm,
                    const std::vector<double>& grid, OracleStats& stats) {
  const ScrambleConfig cfg{w0, v, jz, hm};
  const StateFamily family = family_of(params);
  for (double t : grid) {
    const OtocSample s = compute_sample(cfg, rho, t);
    if (!s.k) {
      ++stats.absent;
      continue;
    }
    double expected = 0.0;
    try {
      expected = analytic_k_magnitude(cls, params, phase(family, jz, t));
    } catch (const DegenerateParametersError&) {
      ++stats.degenerate;
      continue;
    }
    stats.dev.add(std::abs(*s.k - expected));
    stats.k_min = std::min(stats.k_min, *s.k);
    stats.k_max = std::max(stats.k_max, *s.k);
    stats.analytic_max = std::max(stats.analytic_max, expected);
  }
}

struct Resolution {
  double h_multiplier = 0.0;
  bool matched = false;
  std::map<std::string, double> deviation_by_candidate;
};

std::string hm_key(double hm) {
  std::ostringstream os;
  os << hm;
  return os.str();
}

Resolution resolve_multiplier(const std::vector<StateFamilyParams>& draws, double jz,
                              double tolerance) {
  Resolution res;
  double best = std::numeric_limits<double>::infinity();
  const StateFamily family = family_of(draws.front());
  const auto grid = oracle_time_grid(family, jz);
  std::vector<DensityMatrix> states;
  for (const auto& p : draws) states.push_back(make_state(p));
  for (double hm : kHMultiplierCandidates) {
    OracleStats stats;
    for (std::size_t i = 0; i < draws.size(); ++i)
      for (auto w0 : kAllPaulis)
        for (auto v : kAllPaulis)
          compare_oracle(draws[i], states[i], classify_pair(family, w0, v), w0, v, jz, hm, grid,
                         stats);
    res.deviation_by_candidate[hm_key(hm)] = stats.dev.value;
    if (!res.matched && stats.dev.value <= tolerance) {
      res.h_multiplier = hm;
      res.matched = true;
    }
    if (stats.dev.value < best) {
      best = stats.dev.value;
      if (!res.matched) res.h_multiplier = hm;
    }
  }
  return res;
}

const std::vector<double>& bell_alphas() {
  static const std::vector<double> a{0.0, 0.25, 0.5, 0.75, 1.0};
  return a;
}

const std::vector<double>& werner_gammas() {
  static const std::vector<double> g{0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0};
  return g;
}

constexpr BellVariant kAllBellVariants[] = {BellVariant::PhiPlus, BellVariant::PhiMinus,
                                            BellVariant::PsiPlus, BellVariant::PsiMinus};

json values_json(const std::map<std::string, double>& values) {
  json j = json::object();
  for (const auto& [k, v] : values) j[k] = v;
  return j;
}

json params_json(const StateFamilyParams& params) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, XStateParams>)
          return json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"w", p.w}, {"z", p.z}};
        else if constexpr (std::is_same_v<T, BellFamilyParams>)
          return json{{"variant", std::string(to_string(p.variant))}, {"alpha", p.alpha}};
        else return json{{"gamma", p.gamma}};
      },
      params);
}

json table_json_value(const ClassificationTable& table) {
  json j;
  j["family"] = fam(table.family);
  j["params"] = params_json(table.params);
  j["jz"] = table.jz;
  j["h_multiplier"] = table.h_multiplier;
  j["tolerance"] = table.tolerance;
  json cells = json::array();
  for (const auto& c : table.cells) {
    json cj;
    cj["w0"] = std::string(to_string(c.w0));
    cj["v"] = std::string(to_string(c.v));
    cj["body_text"] = std::string(to_string(c.body_text));
    cj["printed_table"] = std::string(to_string(c.printed_table));
    cj["empirical"] = c.empirical ? json(std::string(to_string(*c.empirical))) : json(nullptr);
    cj["matches_body_text"] = c.matches_body_text();
    cj["matches_printed_table"] = c.matches_printed_table();
    json devs = json::object();
    for (const auto& [cls, d] : c.max_deviation) devs[std::string(to_string(cls))] = d;
    cj["max_deviation"] = devs;
    cj["samples_compared"] = c.samples_compared;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return j;
}

}  // namespace

std::string pair_name(PauliLabel w0, PauliLabel v) {
  return std::string(to_string(w0)) + std::string(to_string(v));
}

std::vector<double> time_grid(double t_start, double t_end, std::size_t steps) {
  std::vector<double> grid;
  if (steps == 0) return grid;
  grid.reserve(steps);
  if (steps == 1) {
    grid.push_back(t_start);
    return grid;
  }
  const double dt = (t_end - t_start) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) {
    grid.push_back(i + 1 == steps ? t_end : t_start + dt * static_cast<double>(i));
  }
  return grid;
}

std::vector<double> oracle_time_grid(StateFamily family, double jz, std::size_t points) {
  const auto conv = phase_convention(family);
  const double per = conv ? conv->phi_per_jz_t : 8.0;
  const double scale = jz != 0.0 ? std::abs(jz) : 1.0;
  return time_grid(0.0, 2.0 * kPi / (per * scale), points);
}

StateFamilyParams default_table_params(StateFamily family) {
  switch (family) {
    case StateFamily::XState: return case1_bound_state();
    case StateFamily::Bell: return BellFamilyParams{BellVariant::PhiPlus, 0.5};
    case StateFamily::Werner: return WernerParams{0.5};
  }
  return WernerParams{0.5};
}

ClassificationTable classify_empirically(const StateFamilyParams& params, double jz,
                                         double h_multiplier, const std::vector<double>& t_grid,
                                         double tolerance) {
  ClassificationTable table;
  table.family = family_of(params);
  table.params = params;
  table.jz = jz;
  table.h_multiplier = h_multiplier;
  table.tolerance = tolerance;
  const DensityMatrix rho = make_state(params);
  for (auto w0 : kAllPaulis) {
    for (auto v : kAllPaulis) {
      ClassificationCell cell;
      cell.w0 = w0;
      cell.v = v;
      cell.body_text = classify_pair(table.family, w0, v);
      cell.printed_table = printed_table_class(table.family, w0, v);
      double best = std::numeric_limits<double>::infinity();
      for (KClass cls : family_classes(table.family)) {
        OracleStats stats;
        compare_oracle(params, rho, cls, w0, v, jz, h_multiplier, t_grid, stats);
        cell.max_deviation[cls] = stats.dev.value;
        cell.samples_compared = std::max(cell.samples_compared, stats.dev.count);
        if (stats.dev.count > 0 && stats.dev.value <= tolerance && stats.dev.value < best) {
          best = stats.dev.value;
          cell.empirical = cls;
        }
      }
      table.cells.push_back(std::move(cell));
    }
  }
  return table;
}

ClassificationTable classify_with_resolved_multiplier(const StateFamilyParams& params, double jz,
                                                      double tolerance) {
  const auto grid = oracle_time_grid(family_of(params), jz);
  std::optional<ClassificationTable> best;
  long best_score = -1;
  for (double hm : kHMultiplierCandidates) {
    auto table = classify_empirically(params, jz, hm, grid, tolerance);
    const long score = std::count_if(table.cells.begin(), table.cells.end(),
                                     [](const auto& c) { return c.matches_body_text(); });
    if (score > best_score) {
      best_score = score;
      best = std::move(table);
    }
  }
  return *best;
}

XStateParams random_x_state(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double e[4];
  for (double& x : e) x = expo(rng);
  const double sum = e[0] + e[1] + e[2] + e[3];
  XStateParams p;
  p.a = e[0] / sum;
  p.b = e[1] / sum;
  p.c = e[2] / sum;
  p.d = 1.0 - p.a - p.b - p.c;
  if (p.d < 0.0) p.d = 0.0;
  p.w = unit(rng) * std::sqrt(p.a * p.d);
  p.z = unit(rng) * std::sqrt(p.b * p.c);
  return p;
}

WernerParams random_werner(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return WernerParams{u(rng)};
}

BellFamilyParams random_bell(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const BellVariant variant = kAllBellVariants[pick(rng)];
  return BellFamilyParams{variant, u(rng)};
}

StateFamilyParams random_family_params(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  switch (pick(rng)) {
    case 0: return random_x_state(rng);
    case 1: return random_bell(rng);
    default: return random_werner(rng);
  }
}

PauliLabel random_pauli(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 2);
  return kAllPaulis[pick(rng)];
}

ComplexMatrix random_unitary(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
  for (auto& col : cols)
    for (auto& z : col) z = Complex(gauss(rng), gauss(rng));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < dim; ++r) proj += std::conj(cols[i][r]) * cols[j][r];
      for (std::size_t r = 0; r < dim; ++r) cols[j][r] -= proj * cols[i][r];
    }
    double n = 0.0;
    for (const auto& z : cols[j]) n += std::norm(z);
    n = std::sqrt(n);
    for (auto& z : cols[j]) z /= n;
  }
  ComplexMatrix u(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) u(r, c) = cols[c][r];
  return u;
}

bool VerifyReport::overall_pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.tolerance = options.tolerance;
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  const double jz = options.jz;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick_hm(0, std::size(kHMultiplierCandidates) - 1);

  // Engine invariants over random (state, pair, t) draws.
  {
    MaxDev fid, otoc_formula, positivity, bound4, bound2, rebranch, bures, conc_f, conc_c,
        linear, ranges;
    Finding branch{"branch_beyond_bound", "", "", "", {}};
    double branch_otoc = -1.0;
    for (int i = 0; i < 500; ++i) {
      const auto params = random_family_params(rng);
      const ScrambleConfig cfg{random_pauli(rng), random_pauli(rng), jz,
                               kHMultiplierCandidates[pick_hm(rng)]};
      // One draw in five sits at t = 0 where Z is exactly real.
      const double t = (i % 5 == 0) ? 0.0 : unit(rng) * 2.0 * kPi;
      const OtocSample s = compute_sample(cfg, make_state(params), t);
      const double re = s.z.real(), im = s.z.imag();
      fid.add(std::abs(s.fidelity - (re * re + im * im)));
      otoc_formula.add(std::abs(s.otoc - 2.0 * (1.0 - re)));
      positivity.add(std::max(0.0, -s.otoc));
      bound4.add(std::max(0.0, s.otoc - 4.0));
      ranges.add(std::max({0.0, -s.fidelity, s.fidelity - 1.0, -s.bures, s.bures - 2.0}));
      if (re >= 0.0) {
        bound2.add(std::max(0.0, s.otoc - 2.0));
        rebranch.add(std::abs(2.0 * (1.0 - std::sqrt(std::max(0.0, s.fidelity - im * im))) -
                              s.otoc));
        if (std::abs(im) < 1e-10) {
          bures.add(std::abs(s.otoc - s.bures * s.bures));
          if (s.k) linear.add(std::abs(s.concurrence_m - *s.k * (1.0 - s.otoc / 2.0)));
        }
        if (s.k)
          conc_c.add(std::abs(s.concurrence_m -
                              *s.k * std::sqrt(std::pow(1.0 - s.otoc / 2.0, 2) + im * im)));
      }
      if (s.k) conc_f.add(std::abs(s.concurrence_m - *s.k * std::sqrt(s.fidelity)));
      if (s.otoc > branch_otoc) {
        branch_otoc = s.otoc;
        branch.family = fam(family_of(params));
        branch.pair = pair_name(cfg.w0, cfg.v);
        branch.values = {{"t", t}, {"re_z", re}, {"im_z", im}, {"otoc", s.otoc}};
      }
    }
    auto& c = report.checks;
    c.push_back(make_record("fidelity_identity", "all", "all", fid, 1e-12));
    c.push_back(make_record("otoc_formula", "all", "all", otoc_formula, 1e-12));
    c.push_back(make_record("sample_ranges", "all", "all", ranges, 1e-10));
    c.push_back(make_record("otoc_positivity", "all", "all", positivity, 1e-12));
    c.push_back(make_record("otoc_bound_general", "all", "all", bound4, 1e-12));
    c.push_back(make_record("otoc_bound_re_branch", "all", "all", bound2, 1e-10));
    c.push_back(make_record("re_branch_identity", "all", "all", rebranch, 1e-10));
    c.push_back(make_record("bures_link", "all", "all", bures, 1e-9));
    c.push_back(make_record("concurrence_fidelity_relation", "all", "all", conc_f, 1e-10));
    c.push_back(make_record("concurrence_otoc_relation", "all", "all", conc_c, 1e-10));
    c.push_back(make_record("linear_law", "all", "all", linear, 1e-9));
    branch.note = "largest OTOC among random draws; exceeds 2 whenever Re Z < 0";
    report.findings.push_back(std::move(branch));

    // Deterministic witness: maximally mixed state, anticommuting pair, t = 0.
    const OtocSample w =
        compute_sample(ScrambleConfig{PauliLabel::X, PauliLabel::Y, jz, 1.0},
                       make_werner(WernerParams{0.0}), 0.0);
    report.findings.push_back(Finding{
        "branch_beyond_bound_witness", "werner", "XY",
        "gamma=0 (I/4), t=0: OTOC exceeds 2, so the bound 0 <= <C> <= 2 holds only for Re Z >= 0",
        {{"t", 0.0}, {"re_z", w.z.real()}, {"im_z", w.z.imag()}, {"otoc", w.otoc}}});
  }

  // Purification route and round trip.
  {
    MaxDev z_eq, round_trip;
    for (int i = 0; i < 200; ++i) {
      const StateFamilyParams params =
          (i % 2 == 0) ? StateFamilyParams(random_x_state(rng)) : StateFamilyParams(random_werner(rng));
      const DensityMatrix rho = make_state(params);
      const PureState psi = purify(rho);
      round_trip.add(max_abs_diff(partial_trace_B(psi.projector(), 4, 4), rho.matrix()));
      if (i < 100) {
        const ScrambleConfig cfg{random_pauli(rng), random_pauli(rng), jz, 1.0};
        const double t = unit(rng) * 2.0 * kPi;
        z_eq.add(std::abs(z_via_purification(cfg, rho, t) - compute_sample(cfg, rho, t).z));
      }
    }
    report.checks.push_back(make_record("purification_equality", "all", "all", z_eq, 1e-10));
    report.checks.push_back(make_record("purify_round_trip", "all", "all", round_trip, 1e-9));
  }

  // Forward/backward overlap equals the trace-route fidelity for pure states.
  {
    MaxDev dev;
    for (int i = 0; i < 100; ++i) {
      const PureState psi = make_nonmax_bell(random_bell(rng));
      const ScrambleConfig cfg{random_pauli(rng), random_pauli(rng), jz, 1.0};
      const double t = unit(rng) * 2.0 * kPi;
      const auto [x, y] = forward_backward_states(cfg, psi, t);
      const double overlap = std::norm(inner_product(y.vector(), x.vector()));
      dev.add(std::abs(overlap - compute_sample(cfg, DensityMatrix(psi.projector()), t).fidelity));
    }
    report.checks.push_back(make_record("forward_backward_fidelity", "bell", "all", dev, 1e-10));
  }

  // Simultaneous unitary conjugation of rho, W(0), V and H.
  {
    MaxDev dev;
    for (int i = 0; i < 100; ++i) {
      const auto params = random_family_params(rng);
      const ScrambleConfig cfg{random_pauli(rng), random_pauli(rng), jz, 1.0};
      const double t = unit(rng) * 2.0 * kPi;
      const DensityMatrix rho = make_state(params);
      const ComplexMatrix u = random_unitary(rng, 4);
      const ComplexMatrix ud = adjoint(u);
      auto rotate = [&](const ComplexMatrix& m) { return matmul(matmul(u, m), ud); };
      const ScrambleOperators ops = scramble_operators(cfg, t);
      const ScrambleOperators rotated{rotate(ops.w0), rotate(ops.v), rotate(ops.propagator)};
      const OtocSample a = compute_sample(ops, rho.matrix(), t);
      const OtocSample b = compute_sample(rotated, rotate(rho.matrix()), t);
      dev.add(std::max({std::abs(a.otoc - b.otoc), std::abs(a.fidelity - b.fidelity),
                        std::abs(a.bures - b.bures)}));
    }
    report.checks.push_back(make_record("unitary_invariance", "all", "all", dev, 1e-10));
  }

  // Concurrence oracles.
  {
    MaxDev werner, real_pure;
    for (int i = 0; i <= 100; ++i) {
      const double g = i / 100.0;
      werner.add(std::abs(wootters_concurrence(make_werner(WernerParams{g})) -
                          std::max(0.0, (3.0 * g - 1.0) / 2.0)));
    }
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      std::vector<Complex> v(4);
      double n = 0.0;
      for (auto& x : v) {
        x = gauss(rng);
        n += std::norm(x);
      }
      for (auto& x : v) x /= std::sqrt(n);
      const PureState psi{StateVector(v)};
      const DensityMatrix rho(psi.projector());
      real_pure.add(std::abs(flip_concurrence(rho.matrix()) - wootters_concurrence(rho)));
    }
    report.checks.push_back(
        make_record("werner_static_concurrence", "werner", "none", werner, 1e-9));
    report.checks.push_back(
        make_record("flip_vs_wootters_real_pure", "all", "none", real_pure, 1e-9));
  }

  // t = 0 coincidences of the tilde and double-tilde forms.
  {
    MaxDev dev;
    for (int i = 0; i < 50; ++i) {
      const XStateParams p = random_x_state(rng);
      try {
        dev.add(std::abs(l_tilde(p, 0.0) - std::abs(l_double_tilde(p))));
      } catch (const DegenerateParametersError&) {
      }
    }
    for (double g : werner_gammas()) dev.add(std::abs(m_tilde(g, 0.0) - m_double_tilde(g)));
    report.checks.push_back(make_record("t0_coincidence", "all", "none", dev, 1e-12));
  }

  // Closed-form oracles per family.
  std::vector<StateFamilyParams> x_draws;
  for (int i = 0; i < 50; ++i) x_draws.push_back(random_x_state(rng));
  std::vector<StateFamilyParams> bell_draws;
  for (double a : bell_alphas())
    for (auto variant : kAllBellVariants) bell_draws.push_back(BellFamilyParams{variant, a});
  std::vector<StateFamilyParams> werner_draws;
  for (double g : werner_gammas()) werner_draws.push_back(WernerParams{g});

  const Resolution x_res = resolve_multiplier(x_draws, jz, options.tolerance);
  const Resolution bell_res = resolve_multiplier(bell_draws, jz, options.tolerance);
  const Resolution werner_res = resolve_multiplier(werner_draws, jz, options.tolerance);
  report.resolved_h_multiplier = {{"x", x_res.h_multiplier},
                                  {"bell", bell_res.h_multiplier},
                                  {"werner", werner_res.h_multiplier}};
  for (const auto& [name, res] : {std::pair{"x", &x_res}, std::pair{"bell", &bell_res},
                                  std::pair{"werner", &werner_res}}) {
    report.findings.push_back(Finding{
        "h_multiplier_resolution", name, "all",
        res->matched ? "first candidate whose oracle deviation is within tolerance"
                     : "no candidate matches; smallest deviation chosen",
        res->deviation_by_candidate});
  }

  {
    const auto grid = oracle_time_grid(StateFamily::XState, jz);
    std::size_t above_one = 0, total = 0;
    double largest = 0.0;
    for (auto w0 : kAllPaulis) {
      for (auto v : kAllPaulis) {
        const KClass cls = classify_pair(StateFamily::XState, w0, v);
        OracleStats stats;
        for (const auto& p : x_draws)
          compare_oracle(p, make_state(p), cls, w0, v, jz, x_res.h_multiplier, grid, stats);
        CheckRecord r = make_record("x_state_oracle", "x", pair_name(w0, v), stats.dev,
                                    options.tolerance,
                                    std::string(to_string(cls)) +
                                        "; absent_k=" + std::to_string(stats.absent) +
                                        "; degenerate=" + std::to_string(stats.degenerate));
        r.h_multiplier = x_res.h_multiplier;
        report.checks.push_back(std::move(r));
      }
    }
    for (const auto& p : x_draws) {
      const auto& xp = std::get<XStateParams>(p);
      for (double t : grid) {
        try {
          const double l = l_tilde(xp, phase(StateFamily::XState, jz, t));
          ++total;
          largest = std::max(largest, l);
          if (l > 1.0 + 1e-12) ++above_one;
        } catch (const DegenerateParametersError&) {
        }
      }
    }
    report.findings.push_back(
        Finding{"analytic_k_range", "x", "XX",
                "l_tilde values above 1 on valid X states (the stated range 0 <= k <= 1 fails)",
                {{"evaluated", static_cast<double>(total)},
                 {"above_one", static_cast<double>(above_one)},
                 {"max_l_tilde", largest}}});
  }

  {
    // Case 1: l_tilde = 1 at cos(phi) = 0 and engine k = 1 at the matching t.
    MaxDev dev;
    const XStateParams p = case1_bound_state();
    dev.add(std::abs(l_tilde(p, kPi / 2.0) - 1.0));
    const double t = (kPi / 2.0) / (8.0 * jz * x_res.h_multiplier);
    const OtocSample s = compute_sample(ScrambleConfig{PauliLabel::X, PauliLabel::X, jz,
                                                       x_res.h_multiplier},
                                        make_x_state(p), t);
    dev.add(s.k ? std::abs(*s.k - 1.0) : std::numeric_limits<double>::infinity());
    CheckRecord r = make_record("case1_bound", "x", "XX", dev, 1e-9);
    r.h_multiplier = x_res.h_multiplier;
    report.checks.push_back(std::move(r));
  }

  {
    const auto grid = oracle_time_grid(StateFamily::Bell, jz);
    for (double alpha : bell_alphas()) {
      OracleStats stats;
      MaxDev variance;
      for (auto variant : kAllBellVariants) {
        const BellFamilyParams bp{variant, alpha};
        const DensityMatrix rho = make_state(bp);
        for (auto w0 : kAllPaulis) {
          for (auto v : kAllPaulis) {
            compare_oracle(bp, rho, KClass::KTilde, w0, v, jz, bell_res.h_multiplier, grid, stats);
            std::vector<double> ks;
            for (double t : grid) {
              const auto s = compute_sample(ScrambleConfig{w0, v, jz, bell_res.h_multiplier}, rho, t);
              if (s.k) ks.push_back(*s.k);
            }
            if (ks.empty()) continue;
            double mean = 0.0;
            for (double k : ks) mean += k;
            mean /= static_cast<double>(ks.size());
            double var = 0.0;
            for (double k : ks) var += (k - mean) * (k - mean);
            variance.add(var / static_cast<double>(ks.size()));
          }
        }
      }
      const std::string tag = "alpha=" + hm_key(alpha);
      CheckRecord r = make_record("bell_oracle", "bell", "all", stats.dev, options.tolerance, tag);
      r.h_multiplier = bell_res.h_multiplier;
      report.checks.push_back(std::move(r));
      CheckRecord c = make_record("bell_time_constancy", "bell", "all", variance, 1e-16, tag);
      c.h_multiplier = bell_res.h_multiplier;
      report.checks.push_back(std::move(c));
    }
  }

  {
    const auto grid = oracle_time_grid(StateFamily::Werner, jz);
    for (double gamma : werner_gammas()) {
      const WernerParams wp{gamma};
      const DensityMatrix rho = make_werner(wp);
      for (KClass cls : family_classes(StateFamily::Werner)) {
        OracleStats stats;
        for (auto w0 : kAllPaulis)
          for (auto v : kAllPaulis)
            if (classify_pair(StateFamily::Werner, w0, v) == cls)
              compare_oracle(wp, rho, cls, w0, v, jz, werner_res.h_multiplier, grid, stats);
        CheckRecord r = make_record("werner_oracle", "werner", std::string(to_string(cls)),
                                    stats.dev, options.tolerance,
                                    "gamma=" + hm_key(gamma) +
                                        "; absent_k=" + std::to_string(stats.absent) +
                                        "; degenerate=" + std::to_string(stats.degenerate));
        r.h_multiplier = werner_res.h_multiplier;
        report.checks.push_back(std::move(r));
      }
    }

    // Diagnostic: the form gamma / sqrt(cos^2 + gamma^2 sin^2) that the X-state
    // l_tilde reduces to on Werner parameters, at multiplier 1.
    MaxDev probe;
    MaxDev trace_form;
    for (double gamma : werner_gammas()) {
      const DensityMatrix rho = make_werner(WernerParams{gamma});
      for (double t : grid) {
        const double th = 4.0 * jz * t;
        const double den = std::sqrt(std::pow(std::cos(th), 2) +
                                     gamma * gamma * std::pow(std::sin(th), 2));
        const ScrambleConfig cfg{PauliLabel::X, PauliLabel::X, jz, 1.0};
        const auto s = compute_sample(cfg, rho, t);
        trace_form.add(check_trace_invariant_form(butterfly_matrix(cfg, rho, t)));
        if (s.k && den > 1e-12) probe.add(std::abs(*s.k - gamma / den));
      }
    }
    report.findings.push_back(
        Finding{"werner_gamma_squared_probe", "werner", "XX",
                "max |k - gamma/sqrt(cos^2(4 jz t) + gamma^2 sin^2(4 jz t))| at h_multiplier 1",
                {{"max_abs_deviation", probe.value},
                 {"samples", static_cast<double>(probe.count)}}});
    report.findings.push_back(
        Finding{"trace_invariant_form", "werner", "XX",
                "max |Tr M - Tr((sy sy) M)| over the Werner grid; diagnostic only",
                {{"max_value", trace_form.value}}});
  }

  for (auto family : {StateFamily::XState, StateFamily::Bell, StateFamily::Werner}) {
    report.classification.push_back(
        classify_with_resolved_multiplier(default_table_params(family), jz, options.tolerance));
  }
  return report;
}

std::string report_to_json(const VerifyReport& report, int indent) {
  json j;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  j["overall_pass"] = report.overall_pass();
  j["resolved_h_multiplier"] = values_json(report.resolved_h_multiplier);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json cj;
    cj["check"] = c.check;
    cj["family"] = c.family;
    cj["pair"] = c.pair;
    cj["max_abs_deviation"] = c.max_abs_deviation;
    cj["tolerance"] = c.tolerance;
    cj["pass"] = c.pass;
    cj["h_multiplier"] = c.h_multiplier ? json(*c.h_multiplier) : json(nullptr);
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  json findings = json::array();
  for (const auto& f : report.findings) {
    json fj;
    fj["name"] = f.name;
    fj["family"] = f.family;
    fj["pair"] = f.pair;
    fj["note"] = f.note;
    fj["values"] = values_json(f.values);
    findings.push_back(std::move(fj));
  }
  j["findings"] = std::move(findings);
  json tables = json::array();
  for (const auto& t : report.classification) tables.push_back(table_json_value(t));
  j["classification"] = std::move(tables);
  return j.dump(indent);
}

std::string table_to_json(const ClassificationTable& table, int indent) {
  return table_json_value(table).dump(indent);
}

std::string table_to_text(const ClassificationTable& table) {
  std::ostringstream os;
  os << "family " << to_string(table.family) << "  (jz=" << table.jz
     << ", h_multiplier=" << table.h_multiplier << ", tolerance=" << table.tolerance << ")\n";
  os << "cell: empirical [body text | printed table]; * = conflict with body text, "
        "! = conflict with printed table\n\n";
  os << "W0\\V ";
  constexpr std::size_t kCellWidth = 32;
  for (auto v : kAllPaulis) {
    std::string head(to_string(v));
    head.resize(kCellWidth, ' ');
    os << "| " << head << " ";
  }
  os << "\n";
  for (auto w0 : kAllPaulis) {
    os << "  " << to_string(w0) << "  ";
    for (auto v : kAllPaulis) {
      const auto& c = table.cells[static_cast<std::size_t>(w0) * 3 + static_cast<std::size_t>(v)];
      std::string cell = std::string(c.empirical ? to_string(*c.empirical) : "NONE") + " [" +
                         std::string(to_string(c.body_text)) + " | " +
                         std::string(to_string(c.printed_table)) + "]" +
                         (c.matches_body_text() ? " " : "*") +
                         (c.matches_printed_table() ? " " : "!");
      cell.resize(kCellWidth, ' ');
      os << "| " << cell << " ";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace otoc
