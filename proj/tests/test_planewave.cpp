#include <catch_amalgamated.hpp>

#include <cmath>

#include "fdosc/planewave.hpp"
#include "fdosc/rel.hpp"
#include "fdosc/sample_grid.hpp"

using namespace fdosc;

namespace {
const double kRapidities[] = {0.0, 0.5, -0.5, 1.0};
}

TEST_CASE("plane waves are eigenfunctions of the free Hamiltonian", "[planewave]") {
  const auto grid = SampleGrid::default_grid();
  const auto h0 = planewave::free_hamiltonian();
  for (double chi : kRapidities) {
    const auto xi = planewave::plane_wave(chi);
    const double e = planewave::PlaneWaveState::from_rapidity(chi).energy;
    CHECK(residual(h0(xi), Complex(e) * xi, grid) <= 1e-13);
  }
}

TEST_CASE("exponential and power forms agree", "[planewave]") {
  const auto grid = SampleGrid::default_grid();
  for (double chi : kRapidities) {
    CHECK(residual(planewave::plane_wave(chi), planewave::plane_wave_power_form(chi), grid) <= 1e-13);
  }
}

TEST_CASE("mass shell", "[planewave]") {
  for (double chi : {0.0, 0.5, -0.5, 1.0, 3.0}) {
    const auto s = planewave::PlaneWaveState::from_rapidity(chi);
    CHECK(std::abs(s.mass_shell() - 1.0) <= 1e-13 * s.p0 * s.p0);
    CHECK(s.p == std::sinh(chi));
  }
}

TEST_CASE("interaction-free Hamiltonian reduces to the free one", "[planewave]") {
  const auto grid = SampleGrid::default_grid();
  const auto h = rel::hamiltonian_rel(0.0, 0.0);
  for (double chi : kRapidities) {
    const auto xi = planewave::plane_wave(chi);
    CHECK(residual(h(xi), planewave::free_hamiltonian()(xi), grid) <= 1e-15);
  }
}

TEST_CASE("free momentum eigenvalue is sinh chi", "[planewave]") {
  const auto grid = SampleGrid::default_grid();
  const auto p = rel::momentum_P(0.0, 0.0);
  for (double chi : kRapidities) {
    const auto xi = planewave::plane_wave(chi);
    CHECK(residual(p(xi), Complex(std::sinh(chi)) * xi, grid) <= 1e-13);
  }
}
