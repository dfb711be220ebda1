#pragma once

// Seeded random test functions for operator identities.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fdosc/analytic_function.hpp"
#include "fdosc/differential_operator.hpp"
#include "fdosc/specfun.hpp"

namespace fdosc::harness {

/// (p0 + p1 z + p2 z^2) exp(-(z - c)^2 / s + i k z) with random complex p_j,
/// centre c in [0.5, 6], width s in [4, 10], wave number k in [-1, 1].
/// Entire, and moderate on the strip |Im z| <= 2 the shift operators probe.
inline std::vector<AnalyticFunction> random_analytic_functions(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> centre(0.5, 6.0);
  std::uniform_real_distribution<double> width(4.0, 10.0);
  std::vector<AnalyticFunction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const Complex p0(unit(rng), unit(rng));
    const Complex p1(unit(rng), unit(rng));
    const Complex p2 = 0.2 * Complex(unit(rng), unit(rng));
    const double c = centre(rng);
    const double s = width(rng);
    const double k = unit(rng);
    out.emplace_back(
        [=](Complex z) { return (p0 + z * (p1 + z * p2)) * std::exp(-(z - c) * (z - c) / s + kI * k * z); },
        "entire");
  }
  return out;
}

/// (q0 + q1 x + q2 x^2 + q3 x^3) exp(-beta (x - c)^2), beta in [0.3, 1], c in [0.5, 4].
inline std::vector<JetFunction> random_smooth_functions(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> decay(0.3, 1.0);
  std::uniform_real_distribution<double> centre(0.5, 4.0);
  std::vector<JetFunction> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double q0 = unit(rng);
    const double q1 = unit(rng);
    const double q2 = unit(rng);
    const double q3 = 0.3 * unit(rng);
    const double beta = decay(rng);
    const double c = centre(rng);
    out.push_back(JetFunction::from_expression([=](const auto& x) {
      const auto u = x - c;
      return (q0 + x * (q1 + x * (q2 + x * q3))) * exp(-beta * (u * u));
    }));
  }
  return out;
}

}  // namespace fdosc::harness
