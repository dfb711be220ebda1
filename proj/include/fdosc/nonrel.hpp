#pragma once

// Non-relativistic linear singular oscillator in oscillator units
// (hbar = m = omega = 1, coordinate xi, energies in hbar*omega):
//   H = -1/2 d^2/dxi^2 + xi^2/2 + g0/xi^2,  d = sqrt(1 + 8 g0)/2.

#include <lapacke.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "fdosc/differential_operator.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/specfun.hpp"

namespace fdosc::nonrel {

struct NonRelModel {
  double g0;
  double d;

  double energy(int n) const { return 2.0 * n + d + 1.0; }
  /// Lowest K0 weight (d+1)/2.
  double bargmann_index() const { return 0.5 * (d + 1.0); }
  double casimir() const {
    const double k = bargmann_index();
    return k * (k - 1.0);
  }
  /// (d^2 - 1/4)/2: equals g0, but consistent with d beyond double rounding.
  Taylor::Real coupling() const {
    const Taylor::Real dd = d;
    return (dd + 0.5L) * (dd - 0.5L) / 2.0L;
  }
};

inline NonRelModel make_model(double g0) {
  if (!(g0 > -0.125) || !std::isfinite(g0)) {
    throw CouplingError("non-relativistic model requires g0 > -1/8 (got " + std::to_string(g0) + ")");
  }
  return {g0, 0.5 * std::sqrt(1.0 + 8.0 * g0)};
}

namespace detail {

template <class T>
double value_of(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    return x.value();
  }
}

inline JetFunction coordinate() {
  return JetFunction::from_expression([](const auto& x) { return x; });
}

/// g / xi^2 with an extended-precision constant.
inline JetFunction centrifugal(Taylor::Real g) {
  return JetFunction::from_expression([g](const auto& x) {
    if (value_of(x) == 0.0) throw EvaluationError("nonrel: potential singular at xi = 0");
    return Taylor(g, x.order()) / (x * x);
  });
}

inline JetFunction inverse_power(int p) {
  return JetFunction::from_expression([p](const auto& x) {
    if (value_of(x) == 0.0) throw EvaluationError("nonrel: coefficient singular at xi = 0");
    auto y = x;
    for (int i = 1; i < p; ++i) y = y * x;
    return 1.0 / y;
  });
}

}  // namespace detail

inline DifferentialOperator hamiltonian(const NonRelModel& m) {
  const auto oscillator = JetFunction::from_expression([](const auto& x) { return 0.5 * x * x; });
  return -0.5 * derivative_op(2) + mul_op(oscillator + detail::centrifugal(m.coupling()));
}

struct LadderPair {
  DifferentialOperator minus;
  DifferentialOperator plus;
};

/// c^{-/+} = (xi +/- d/dxi - (d + 1/2)/xi) / sqrt(2).
inline LadderPair ladder_c(const NonRelModel& m) {
  const double s = 1.0 / std::numbers::sqrt2;
  const auto multiplier = detail::coordinate() - (m.d + 0.5) * detail::inverse_power(1);
  const auto base = mul_op(s * multiplier);
  return {base + s * derivative_op(1), base - s * derivative_op(1)};
}

/// Ordinary oscillator ladder a^{-/+} = (xi +/- d/dxi) / sqrt(2).
inline LadderPair ladder_a() {
  const double s = 1.0 / std::numbers::sqrt2;
  const auto base = mul_op(s * detail::coordinate());
  return {base + s * derivative_op(1), base - s * derivative_op(1)};
}

struct QuadraticLadder {
  DifferentialOperator minus;         ///< (a^-)^2 - g0/xi^2
  DifferentialOperator plus;          ///< (a^+)^2 - g0/xi^2
  DifferentialOperator minus_from_c;  ///< sqrt(2) xi c^- - H + d + 1
};

inline QuadraticLadder ladder_A(const NonRelModel& m) {
  // (a^{-/+})^2 = (xi +/- d)^2 / 2, kept free of the 1/sqrt2 rounding
  const auto x = mul_op(detail::coordinate());
  const auto lower = x + derivative_op(1);
  const auto upper = x - derivative_op(1);
  const auto c = ladder_c(m);
  const auto centrifugal = mul_op(detail::centrifugal(m.coupling()));
  const auto via_c = mul_op(std::numbers::sqrt2 * detail::coordinate()) * c.minus - hamiltonian(m) +
                     mul_op(m.d + 1.0);
  return {0.5 * (lower * lower) - centrifugal, 0.5 * (upper * upper) - centrifugal, via_c};
}

struct Su11Generators {
  DifferentialOperator k0;
  DifferentialOperator k_minus;
  DifferentialOperator k_plus;
};

/// K0 = H/2, K^{-/+} = A^{-/+}/2.
inline Su11Generators su11_generators(const NonRelModel& m) {
  const auto a = ladder_A(m);
  return {0.5 * hamiltonian(m), 0.5 * a.minus, 0.5 * a.plus};
}

/// Casimir K0 (K0 - 1) - K^+ K^-.
inline DifferentialOperator casimir_operator(const NonRelModel& m) {
  const auto k = su11_generators(m);
  return k.k0 * (k.k0 - DifferentialOperator::identity()) - k.k_plus * k.k_minus;
}

struct NonRelEigenState {
  int n;
  double energy;
  JetFunction wavefunction;
  double norm_constant;
};

/// Unit-norm eigenfunction c_n xi^{d+1/2} exp(-xi^2/2) L_n^d(xi^2),
/// c_n = sqrt(2 n! / Gamma(n+d+1)).
inline NonRelEigenState eigenfunction(const NonRelModel& m, int n) {
  if (n < 0) throw std::invalid_argument("eigenfunction: n must be non-negative");
  const double d = m.d;
  const double c_n = std::sqrt(2.0 * std::exp(std::lgamma(n + 1.0) - std::lgamma(n + d + 1.0)));
  auto psi = JetFunction::from_expression([=](const auto& x) {
    if (!(detail::value_of(x) > 0.0)) throw EvaluationError("nonrel eigenfunction defined for xi > 0 only");
    const auto y = x * x;
    return c_n * pow(x, static_cast<Taylor::Real>(d) + 0.5L) * exp(-0.5 * y) * laguerre(n, d, y);
  });
  return {n, m.energy(n), psi, c_n};
}

/// Lowest `count` eigenvalues of the Dirichlet finite-difference
/// discretisation of H on [1e-3, xi_max] with n_points interior nodes.
inline std::vector<double> matrix_oracle(const NonRelModel& m, double xi_max, int n_points, int count = 6) {
  if (n_points < 100) throw std::invalid_argument("matrix_oracle: n_points must be >= 100");
  if (!(xi_max >= 10.0)) throw std::invalid_argument("matrix_oracle: xi_max must be >= 10");
  if (count < 1 || count > n_points) throw std::invalid_argument("matrix_oracle: bad eigenvalue count");
  constexpr double xi_min = 1e-3;
  const double h = (xi_max - xi_min) / (n_points + 1);
  std::vector<double> diag(static_cast<std::size_t>(n_points));
  std::vector<double> off(static_cast<std::size_t>(n_points), -0.5 / (h * h));
  for (int j = 0; j < n_points; ++j) {
    const double xi = xi_min + (j + 1) * h;
    diag[static_cast<std::size_t>(j)] = 1.0 / (h * h) + 0.5 * xi * xi + m.g0 / (xi * xi);
  }
  std::vector<double> eig(static_cast<std::size_t>(n_points));
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(count));
  lapack_int found = 0;
  double dummy_z = 0.0;
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'I', n_points, diag.data(), off.data(), 0.0, 0.0, 1,
                                         count, 0.0, &found, eig.data(), &dummy_z, 1, support.data());
  if (info != 0 || found != count) {
    throw ConvergenceError("matrix_oracle: tridiagonal eigensolver failed (info " + std::to_string(info) + ")");
  }
  eig.resize(static_cast<std::size_t>(count));
  return eig;
}

}  // namespace fdosc::nonrel
