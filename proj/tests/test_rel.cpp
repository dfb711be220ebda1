#include <catch_amalgamated.hpp>

#include <cmath>

#include "fdosc/errors.hpp"
#include "fdosc/harness/test_functions.hpp"
#include "fdosc/rel.hpp"
#include "fdosc/sample_grid.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fdosc;

namespace {

const SampleGrid& grid() {
  static const SampleGrid g = SampleGrid::default_grid();
  return g;
}

struct Frozen {
  double omega0, g0, alpha, nu, e0;
};

// alpha, nu and E_0/mc^2 from mpmath at 40 digits.
const Frozen kFrozen[] = {
    {0.5, 0.1, 1.1790770339219021, 2.5096901208892459, 1.844383577405574},
    {0.25, 0.5, 1.6496942070500707, 4.3959213583279, 1.5114038913444927},
    {0.1, 0.05, 1.0916926571298686, 10.507492183334374, 1.1599184840464243},
    {0.1, 0.1, 1.1711196674551197, 10.50247961217392, 1.167359927962904},
    {0.5, 0.05, 1.0938294400743133, 2.5365084326123051, 1.8151689363433092},
};

const double kParamSets[][2] = {{0.1, 0.05}, {0.1, 0.1}, {0.5, 0.05}, {0.5, 0.1}};

}  // namespace

TEST_CASE("model parameters", "[rel]") {
  for (const auto& f : kFrozen) {
    const auto m = rel::make_rel_model(f.omega0, f.g0);
    CHECK_THAT(m.alpha, WithinRel(f.alpha, 1e-14));
    CHECK_THAT(m.nu, WithinRel(f.nu, 1e-14));
    CHECK_THAT(m.energy(0), WithinRel(f.e0, 1e-14));
    CHECK_THAT(m.energy(3) - m.energy(2), WithinRel(2.0 * f.omega0, 1e-13));
  }
}

TEST_CASE("invalid couplings are rejected", "[rel][errors]") {
  REQUIRE_THROWS_AS(rel::make_rel_model(1.0, 1.0), CouplingError);
  REQUIRE_THROWS_AS(rel::make_rel_model(0.5, -0.1), CouplingError);
  REQUIRE_THROWS_AS(rel::make_rel_model(0.0, 0.1), CouplingError);
  REQUIRE_NOTHROW(rel::make_rel_model(0.5, 0.5));  // 8 g0 omega0^2 = 1 exactly
}

TEST_CASE("eigenfunction values", "[rel]") {
  const auto check = [](double w, double g, int n, double rho, Complex want) {
    const Complex got = rel::eigenfunction_rel(rel::make_rel_model(w, g), n).wavefunction(rho);
    INFO("got " << got << ", want " << want);
    CHECK(std::abs(got - want) <= 1e-11 * std::abs(want));
  };
  check(0.5, 0.1, 0, 1.0, {-0.94417974391625969, -0.53248374781205683});
  check(0.1, 0.05, 3, 2.5, {-9207022812.6941028, -2812551356.4550437});
  check(0.25, 0.5, 2, 0.75, {-121.64175001807225, -1262.8622377766725});
}

TEST_CASE("eigenfunctions have a pole at rho = 0", "[rel][errors]") {
  const auto phi = rel::eigenfunction_rel(rel::make_rel_model(0.5, 0.1), 0).wavefunction;
  REQUIRE_THROWS_AS(phi(0.0), EvaluationError);
  REQUIRE_THROWS_AS(phi(0.0), PoleError);
}

TEST_CASE("eigen-equation", "[rel]") {
  for (const auto& p : kParamSets) {
    const auto m = rel::make_rel_model(p[0], p[1]);
    const auto h = rel::hamiltonian_rel(m);
    for (int n = 0; n <= 8; ++n) {
      const auto phi = unit_scaled(rel::eigenfunction_rel(m, n).wavefunction, grid());
      CHECK(residual(h(phi), Complex(m.energy(n)) * phi, grid()) <= 1e-8);
    }
  }
}

TEST_CASE("factorisation through b-", "[rel]") {
  const auto m = rel::make_rel_model(0.5, 0.1);
  const auto h = rel::hamiltonian_rel(m);
  const auto b = rel::ladder_b(m);
  const auto rhs = b.plus * b.minus + mul_op(Complex(m.energy(0)));
  for (const auto& f : harness::random_analytic_functions(23, 6)) {
    CHECK(residual(h, rhs, unit_scaled(f, grid()), grid()) <= 1e-7);
  }
  const auto phi0 = unit_scaled(rel::eigenfunction_rel(m, 0).wavefunction, grid());
  CHECK(residual(b.minus(phi0), AnalyticFunction::constant(0.0), grid()) <= 1e-10);
}

TEST_CASE("ladder operators shift the energy by 2 omega0", "[rel]") {
  const auto m = rel::make_rel_model(0.1, 0.05);
  const auto h = rel::hamiltonian_rel(m);
  const auto lad = rel::ladder_B(m);
  for (int n = 0; n <= 6; ++n) {
    const auto phi = unit_scaled(rel::eigenfunction_rel(m, n).wavefunction, grid());
    const auto down = lad.minus(phi);
    const auto lhs = commutator(h, lad.minus)(phi);
    CHECK(residual(lhs, Complex(-2.0 * m.omega0) * down, grid()) <= 1e-8);
  }
}

TEST_CASE("raising maps phi_n to -2 omega0 phi_{n+1}", "[rel]") {
  for (const auto& p : kParamSets) {
    const auto m = rel::make_rel_model(p[0], p[1]);
    const auto up = rel::ladder_B(m).plus;
    for (int n = 0; n < 4; ++n) {
      const auto phi_n = rel::eigenfunction_rel(m, n).wavefunction;
      const auto phi_next = rel::eigenfunction_rel(m, n + 1).wavefunction;
      const auto scaled = Complex(-2.0 * m.omega0) * phi_next;
      const auto unit = unit_scaled(scaled, grid());
      CHECK(residual(Complex(1.0) * unit_scaled(up(phi_n), grid()), unit, grid()) <= 1e-8);
      for (double x : {0.5, 2.0}) {
        const Complex ratio = up(phi_n)(x) / phi_next(x);
        CHECK_THAT(ratio.real(), WithinRel(-2.0 * m.omega0, 1e-8));
      }
    }
  }
}

TEST_CASE("ladder coefficients", "[rel]") {
  const auto m = rel::make_rel_model(0.5, 0.1);
  CHECK(rel::ladder_coefficient(m, 0) == 0.0);
  const double b1 = 2.0 * 0.5 * std::sqrt(1.0 * (m.alpha + m.nu) * (m.alpha + 0.5) * (m.nu + 0.5));
  CHECK_THAT(rel::ladder_coefficient(m, 1), WithinRel(b1, 1e-14));
  CHECK_THAT(rel::kappa(m, 2), WithinRel(std::sqrt(2.0 * (1.0 + m.alpha + m.nu)), 1e-14));
  CHECK_THAT(rel::kappa(m, 2, rel::CoefficientForm::kShiftedByOne), WithinRel(std::sqrt(2.0 * (2.0 + m.alpha + m.nu)), 1e-14));
  double prod = 1.0;
  for (int k = 1; k <= 5; ++k) prod *= rel::ladder_coefficient(m, k);
  CHECK_THAT(rel::ladder_normalization(m, 5), WithinRel(1.0 / prod, 1e-12));
  // b_n = kappa_n sqrt(f(E_n))
  for (int n = 1; n <= 5; ++n) {
    const double k = rel::kappa(m, n);
    const double f = rel::spectral_function(m, m.energy(n));
    CHECK_THAT(rel::ladder_coefficient(m, n), WithinRel(k * std::sqrt(f), 1e-12));
  }
}

TEST_CASE("ladder reconstruction", "[rel]") {
  const auto m = rel::make_rel_model(0.1, 0.05);
  for (int n = 1; n <= 4; ++n) {
    const auto built = rel::ladder_state(m, n).wavefunction;
    const auto phi = rel::eigenfunction_rel(m, n).wavefunction;
    for (double x : {0.4, 1.5, 5.0}) {
      const Complex ratio = built(x) / phi(x);
      CHECK_THAT(ratio.real(), WithinRel(std::pow(-2.0 * m.omega0, n) * rel::ladder_normalization(m, n), 1e-7));
      CHECK_THAT(ratio.imag(), WithinAbs(0.0, 1e-7 * std::abs(ratio)));
    }
  }
}

TEST_CASE("spectral function is positive on the spectrum", "[rel]") {
  const auto m = rel::make_rel_model(0.5, 0.1);
  const auto su = rel::su11_rel(m);
  for (int n = 0; n <= 8; ++n) {
    const double f = rel::spectral_function(m, m.energy(n));
    CHECK_THAT(f, WithinRel(4.0 * 0.25 * (n + m.alpha - 0.5) * (n + m.nu - 0.5), 1e-13));
    CHECK_THAT(su.inverse_sqrt_f(n), WithinRel(1.0 / std::sqrt(f), 1e-15));
  }
}

TEST_CASE("non-relativistic limit", "[rel]") {
  const auto lin = rel::nonrel_limit(0.1, {1e-2, 5e-3});
  CHECK_THAT(lin[0], WithinRel(2.5296e-4, 1e-3));
  CHECK_THAT(lin[1], WithinRel(1.2574e-4, 1e-3));
  CHECK_THAT(lin[0] / lin[1], WithinAbs(2.0, 0.4));
  const auto quad = rel::nonrel_limit(0.125, {1e-2, 5e-3});
  CHECK_THAT(quad[0], WithinRel(4.388e-6, 1e-2));
  CHECK_THAT(quad[0] / quad[1], WithinAbs(4.0, 0.2));
}
