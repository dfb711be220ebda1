#pragma once

// 1D relativistic plane waves, rho = x / lambda-bar, chi the rapidity.

#include <cmath>

#include "fdosc/analytic_function.hpp"
#include "fdosc/difference_operator.hpp"
#include "fdosc/specfun.hpp"

namespace fdosc::planewave {

struct PlaneWaveState {
  double chi;
  double p;       ///< sinh(chi), units of mc
  double p0;      ///< cosh(chi), units of mc
  double energy;  ///< p0, units of mc^2

  static PlaneWaveState from_rapidity(double chi) {
    const double p0 = std::cosh(chi);
    return {chi, std::sinh(chi), p0, p0};
  }

  double mass_shell() const { return p0 * p0 - p * p; }
};

/// rho -> exp(i rho chi)
inline AnalyticFunction plane_wave(double chi) {
  return AnalyticFunction([chi](Complex z) { return std::exp(kI * chi * z); }, "entire");
}

/// The same wave written as ((p0 - p)/mc)^{-i rho}.
inline AnalyticFunction plane_wave_power_form(double chi) {
  const auto s = PlaneWaveState::from_rapidity(chi);
  const double log_base = std::log(s.p0 - s.p);
  return AnalyticFunction([log_base](Complex z) { return std::exp(-kI * z * log_base); }, "entire");
}

/// H0 = cosh(i d/drho) = (e^{i d} + e^{-i d}) / 2, units of mc^2.
inline DifferenceOperator free_hamiltonian() { return 0.5 * (shift_op(kI) + shift_op(-kI)); }

}  // namespace fdosc::planewave
