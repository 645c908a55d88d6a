#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "otoc/engine.hpp"
#include "otoc/verify.hpp"

using namespace otoc;

namespace {

constexpr double kPi = std::numbers::pi;

using M4 = std::array<std::array<Complex, 4>, 4>;

M4 to_array(const ComplexMatrix& m) {
  M4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i][j] = m(i, j);
  return out;
}

M4 mul(const M4& a, const M4& b) {
  M4 c{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Dense e^{iHt} W e^{-iHt} with H = -jz*m*diag(1,-1,-1,1), exponentials taken
// entrywise and conjugation done as a full triple product.
M4 oracle_evolve(const ComplexMatrix& w, double jz, double m, double t) {
  const double h[4] = {-jz * m, jz * m, jz * m, -jz * m};
  M4 u{}, ud{};
  for (std::size_t i = 0; i < 4; ++i) {
    u[i][i] = std::exp(Complex(0.0, h[i] * t));
    ud[i][i] = std::conj(u[i][i]);
  }
  return mul(mul(u, to_array(w)), ud);
}

double max_diff(const M4& a, const ComplexMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) d = std::max(d, std::abs(a[i][j] - b(i, j)));
  return d;
}

}  // namespace

TEST_CASE("ising hamiltonian") {
  CHECK(ising_hamiltonian({PauliLabel::X, PauliLabel::X, 0.0, 2.0}) == ComplexMatrix(4));
  const Complex d[] = {-2.0, 2.0, 2.0, -2.0};
  CHECK(ising_hamiltonian({PauliLabel::X, PauliLabel::X, 1.0, 2.0}) == ComplexMatrix::diagonal(d));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 10; ++i) {
    const ComplexMatrix h = ising_hamiltonian({PauliLabel::X, PauliLabel::X, u(rng), 1.0});
    CHECK(is_diagonal(h));
    CHECK(is_hermitian(h));
  }
  CHECK_THROWS_AS(validate(ScrambleConfig{PauliLabel::X, PauliLabel::X, 1.0, 0.0}),
                  InvalidStateError);
  CHECK_THROWS_AS(validate(ScrambleConfig{PauliLabel::X, PauliLabel::X, NAN, 1.0}),
                  InvalidStateError);
}

TEST_CASE("evolve_operator") {
  const ScrambleConfig cfg{PauliLabel::X, PauliLabel::X, 1.0, 2.0};
  for (auto p : kAllPaulis) CHECK(evolve_operator(p, cfg, 0.0) == pauli_on_first(p));
  for (double t : {0.1, 0.7, 3.0})
    CHECK(max_abs_diff(evolve_operator(PauliLabel::Z, cfg, t), pauli_on_first(PauliLabel::Z)) <
          1e-15);
  const ComplexMatrix w = evolve_operator(PauliLabel::X, cfg, kPi / 4);
  CHECK(max_diff(oracle_evolve(pauli_on_first(PauliLabel::X), 1.0, 2.0, kPi / 4), w) < 1e-14);
  CHECK(is_hermitian(w));
  CHECK(is_unitary(w));
}

TEST_CASE("butterfly matrix at t = 0") {
  std::mt19937_64 rng(2);
  const DensityMatrix rho = make_x_state(random_x_state(rng));
  for (auto p : kAllPaulis) {
    const ScrambleConfig cfg{p, p, 1.0, 2.0};
    CHECK(max_abs_diff(butterfly_matrix(cfg, rho, 0.0), rho.matrix()) < 1e-15);
  }
  const ScrambleConfig xy{PauliLabel::X, PauliLabel::Y, 1.0, 2.0};
  CHECK(max_abs_diff(butterfly_matrix(xy, rho, 0.0), scale(rho.matrix(), -1.0)) < 1e-15);
}

TEST_CASE("butterfly matrix against regrouped product") {
  std::mt19937_64 rng(3);
  const DensityMatrix rho = make_x_state(random_x_state(rng));
  const ScrambleConfig cfg{PauliLabel::X, PauliLabel::X, 1.0, 2.0};
  const double t = 0.3;
  const M4 w = oracle_evolve(pauli_on_first(PauliLabel::X), 1.0, 2.0, t);
  const M4 v = to_array(pauli_on_first(PauliLabel::X));
  // W (V (W (V rho))) instead of ((W V)(W V)) rho
  const M4 m = mul(w, mul(v, mul(w, mul(v, to_array(rho.matrix())))));
  CHECK(max_diff(m, butterfly_matrix(cfg, rho, t)) < 1e-14);
}

TEST_CASE("compute_sample examples") {
  const DensityMatrix rho = make_werner({0.4});
  for (auto p : kAllPaulis) {
    const OtocSample s = compute_sample({p, p, 1.0, 2.0}, rho, 0.0);
    CHECK(s.otoc == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.fidelity == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(s.bures == doctest::Approx(0.0).epsilon(1e-15));
  }

  // Werner gamma = 0, X then Y, t = 0: Tr((sx sy sx sy x I) I/4) by hand.
  const M4 xyxy = mul(mul(to_array(pauli_on_first(PauliLabel::X)),
                          to_array(pauli_on_first(PauliLabel::Y))),
                      mul(to_array(pauli_on_first(PauliLabel::X)),
                          to_array(pauli_on_first(PauliLabel::Y))));
  Complex tr = 0.0;
  for (std::size_t i = 0; i < 4; ++i) tr += xyxy[i][i] * 0.25;
  const OtocSample s =
      compute_sample({PauliLabel::X, PauliLabel::Y, 1.0, 2.0}, make_werner({0.0}), 0.0);
  CHECK(std::abs(s.z - tr) < 1e-15);
  CHECK(s.z.real() == doctest::Approx(-1.0));
  CHECK(s.otoc == doctest::Approx(4.0));
  CHECK(s.bures == doctest::Approx(0.0).epsilon(1e-12));

  // all-1/4 X state, hMultiplier 1, cos(8 t) = 0
  const DensityMatrix quarter = make_x_state({0.25, 0.25, 0.25, 0.25, 0.25, 0.25});
  const OtocSample q = compute_sample({PauliLabel::X, PauliLabel::X, 1.0, 1.0}, quarter, kPi / 16);
  REQUIRE(q.k.has_value());
  CHECK(*q.k == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sample invariants over random draws") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const DensityMatrix rho = make_state(random_family_params(rng));
    const ScrambleConfig cfg{random_pauli(rng), random_pauli(rng), 1.0, 1.0 + unit(rng)};
    const OtocSample s = compute_sample(cfg, rho, 5.0 * unit(rng));
    CHECK(std::abs(s.fidelity - std::norm(s.z)) < 1e-12);
    CHECK(std::abs(s.otoc - 2.0 * (1.0 - s.z.real())) < 1e-12);
    CHECK(s.fidelity <= 1.0 + 1e-10);
    CHECK(s.bures >= 0.0);
    CHECK(s.bures <= 2.0 + 1e-10);
    CHECK(s.otoc >= -1e-12);
    CHECK(s.otoc <= 4.0 + 1e-12);
    // literal formula for D
    CHECK(std::abs(s.bures * s.bures - 2.0 * (1.0 - std::sqrt(s.fidelity))) < 1e-12);
    if (s.k) CHECK(std::abs(s.concurrence_m - *s.k * std::sqrt(s.fidelity)) < 1e-10);
    if (s.z.real() >= 0.0) {
      CHECK(s.otoc <= 2.0 + 1e-10);
      CHECK(std::abs(2.0 * (1.0 - std::sqrt(std::max(0.0, s.fidelity - s.z.imag() * s.z.imag()))) -
                     s.otoc) < 1e-10);
    }
  }
}

TEST_CASE("sample_from_butterfly rejects fidelity above one") {
  const ComplexMatrix big = scale(ComplexMatrix::identity(4), 0.5);  // trace 2
  CHECK_THROWS_AS(sample_from_butterfly(big, 0.0), NumericConsistencyError);
  const OtocSample s = sample_from_butterfly(ComplexMatrix(4), 0.0);
  CHECK_FALSE(s.k.has_value());
}

TEST_CASE("purification route") {
  const ScrambleConfig xy{PauliLabel::X, PauliLabel::Y, 1.0, 2.0};
  const DensityMatrix w = make_werner({0.5});
  CHECK(std::abs(z_via_purification(xy, w, 0.7) - compute_sample(xy, w, 0.7).z) < 1e-10);

  const PureState phi = make_nonmax_bell({BellVariant::PhiPlus, 0.4});
  const ScrambleConfig cfg{PauliLabel::X, PauliLabel::Z, 1.0, 2.0};
  const M4 m = mul(mul(to_array(evolve_operator(PauliLabel::X, cfg, 0.2)),
                       to_array(pauli_on_first(PauliLabel::Z))),
                   mul(to_array(evolve_operator(PauliLabel::X, cfg, 0.2)),
                       to_array(pauli_on_first(PauliLabel::Z))));
  Complex direct = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      direct += std::conj(phi.vector()[i]) * m[i][j] * phi.vector()[j];
  CHECK(std::abs(z_via_purification(cfg, DensityMatrix(phi.projector()), 0.2) - direct) < 1e-12);

  for (auto p : kAllPaulis)
    for (auto q : kAllPaulis) {
      const Complex z = z_via_purification({p, q, 1.0, 2.0}, make_werner({0.0}), 0.0);
      CHECK(std::abs(z.imag()) < 1e-12);
      CHECK(std::abs(std::abs(z.real()) - 1.0) < 1e-12);
    }

  std::mt19937_64 rng(5);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = make_state(random_family_params(rng));
    const ScrambleConfig c{random_pauli(rng), random_pauli(rng), 1.0, 1.0};
    worst = std::max(worst, std::abs(z_via_purification(c, rho, 0.37 * i) -
                                      compute_sample(c, rho, 0.37 * i).z));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("forward and backward states") {
  const PureState phi = make_nonmax_bell({BellVariant::PhiPlus, 1.0});
  const ScrambleConfig xx{PauliLabel::X, PauliLabel::X, 1.0, 2.0};
  const auto [x0, y0] = forward_backward_states(xx, phi, 0.0);
  CHECK(x0.vector() == y0.vector());

  const ScrambleConfig xz{PauliLabel::X, PauliLabel::Z, 1.0, 2.0};
  const auto [x, y] = forward_backward_states(xz, phi, 0.2);
  CHECK(x.vector().norm() == doctest::Approx(1.0));
  const double a = std::norm(inner_product(y.vector(), x.vector()));
  const double b = std::norm(inner_product(x.vector(), y.vector()));
  CHECK(a == doctest::Approx(b).epsilon(1e-15));
  CHECK(std::abs(a - compute_sample(xz, DensityMatrix(phi.projector()), 0.2).fidelity) < 1e-10);
  CHECK_THROWS_AS(forward_backward_states(xz, purify(make_werner({0.5})), 0.1),
                  DimensionMismatchError);
}

TEST_CASE("trace invariant form") {
  // rows (a b c -a), (d e e f), (g h h i), (j k l -j)
  std::mt19937_64 rng(8);
  std::normal_distribution<double> g(0.0, 1.0);
  auto r = [&] { return Complex(g(rng), g(rng)); };
  const Complex a = r(), e = r(), h = r(), j = r();
  // clang-format off
  const ComplexMatrix m{
      {a, r(), r(), -a},
      {r(), e, e, r()},
      {r(), h, h, r()},
      {j, r(), r(), -j}};
  // clang-format on
  CHECK(check_trace_invariant_form(m) < 1e-14);
  CHECK(check_trace_invariant_form(ComplexMatrix::identity(4)) == 4.0);
  CHECK_THROWS_AS(check_trace_invariant_form(ComplexMatrix::identity(2)),
                  DimensionMismatchError);
}

TEST_CASE("simultaneous conjugation invariance") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const DensityMatrix rho = make_state(random_family_params(rng));
    const ScrambleConfig cfg{random_pauli(rng), random_pauli(rng), 1.0, 1.0};
    const double t = 6.0 * unit(rng);
    const ComplexMatrix u = random_unitary(rng, 4);
    auto rot = [&](const ComplexMatrix& m) { return matmul(matmul(u, m), adjoint(u)); };
    const ScrambleOperators ops = scramble_operators(cfg, t);
    const OtocSample a = compute_sample(ops, rho.matrix(), t);
    const OtocSample b =
        compute_sample({rot(ops.w0), rot(ops.v), rot(ops.propagator)}, rot(rho.matrix()), t);
    worst = std::max({worst, std::abs(a.otoc - b.otoc), std::abs(a.fidelity - b.fidelity),
                      std::abs(a.bures - b.bures)});
  }
  CHECK(worst < 1e-10);
}
