#pragma once

// Checks on the special functions, the difference-operator algebra and the
// free plane waves. None of these depend on the suite's model parameters.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fdosc/difference_operator.hpp"
#include "fdosc/harness/measure.hpp"
#include "fdosc/harness/test_functions.hpp"
#include "fdosc/planewave.hpp"
#include "fdosc/rel.hpp"
#include "fdosc/specfun.hpp"

namespace fdosc::harness::checks {

namespace detail {

inline std::vector<Complex> random_complex_points(std::uint64_t seed, int count, double half_width) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-half_width, half_width);
  std::vector<Complex> out(static_cast<std::size_t>(count));
  for (auto& z : out) {
    const double re = u(rng);
    z = Complex(re, u(rng));
  }
  return out;
}

inline const std::vector<double>& rapidities() {
  static const std::vector<double> chis = {-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
  return chis;
}

}  // namespace detail

inline Measurement gamma_recurrence(const SuiteContext&) {
  double worst = 0.0;
  for (Complex z : detail::random_complex_points(0x6a09e667, 10000, 20.0)) {
    const Complex rhs = z * gamma(z);
    worst = std::max(worst, std::abs(gamma(z + 1.0) - rhs) / std::abs(rhs));
  }
  return {worst, "relative error of Gamma(z+1) = z Gamma(z), 1e4 points in |Re z|, |Im z| <= 20"};
}

inline Measurement gamma_reflection(const SuiteContext&) {
  double worst = 0.0;
  for (Complex z : detail::random_complex_points(0xbb67ae85, 10000, 20.0)) {
    const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
    worst = std::max(worst, std::abs(gamma(z) * gamma(1.0 - z) - rhs) / std::abs(rhs));
  }
  return {worst, "relative error of Gamma(z) Gamma(1-z) = pi / sin(pi z), 1e4 points"};
}

inline Measurement generalized_degree_recurrence(const SuiteContext&) {
  std::mt19937_64 rng(0x3c6ef372);
  std::uniform_real_distribution<double> re(-8.0, 8.0);
  std::uniform_real_distribution<double> im(-2.0, 2.0);
  std::uniform_real_distribution<double> lam(0.05, 6.0);
  double worst = 0.0;
  int skipped = 0;
  for (int i = 0; i < 2000; ++i) {
    const double x = re(rng);
    const Complex rho(x, im(rng));
    const double l = lam(rng);
    try {
      const Complex lhs = generalized_degree(rho, l + 1.0);
      const Complex rhs = kI * (l - kI * rho) * generalized_degree(rho, l);
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
    } catch (const PoleError&) {
      ++skipped;
    }
  }
  return {worst, "relative error of rho^(l+1) = i (l - i rho) rho^(l), 2000 points; poles skipped: " +
                     std::to_string(skipped)};
}

inline Measurement laguerre_recurrence(const SuiteContext&) {
  std::mt19937_64 rng(0xa54ff53a);
  std::uniform_real_distribution<double> dd(0.0, 5.0);
  std::uniform_real_distribution<double> yy(0.0, 20.0);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double d = dd(rng);
    const double y = yy(rng);
    for (int n = 1; n < 20; ++n) {
      const double a = (n + 1) * laguerre(n + 1, d, y);
      const double b = (2.0 * n + 1.0 + d - y) * laguerre(n, d, y);
      const double c = (n + d) * laguerre(n - 1, d, y);
      const double scale = std::abs(a) + std::abs(b) + std::abs(c);
      if (scale > 0.0) worst = std::max(worst, std::abs(a - b + c) / scale);
    }
  }
  return {worst, "three-term recurrence residual relative to its term sizes, n < 20"};
}

inline Measurement cdhahn_symmetry(const SuiteContext&) {
  std::mt19937_64 rng(0x510e527f);
  std::uniform_real_distribution<double> xx(0.0, 8.0);
  std::uniform_real_distribution<double> aa(0.5, 3.0);
  std::uniform_real_distribution<double> bc(0.5, 12.0);
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double x = xx(rng);
    const double a = aa(rng);
    const double b = bc(rng);
    const double c = bc(rng);
    for (int n = 0; n <= 8; ++n) {
      const double s1 = cdhahn(n, x, a, b, c);
      const double s2 = cdhahn(n, x, a, c, b);
      worst = std::max(worst, std::abs(s1 - s2) / std::max(1.0, std::abs(s1)));
    }
  }
  return {worst, "S_n(x^2; a, b, c) = S_n(x^2; a, c, b), n <= 8, 500 parameter draws"};
}

inline Measurement shift_exactness(const SuiteContext& ctx) {
  std::mt19937_64 rng(0x9b05688c);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::vector<Complex> shifts = {kI, -kI, 0.5 * kI, -0.5 * kI, Complex(0.3, 0.7)};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int degree = trial % 11;
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    double factorial = 1.0;
    for (int j = 0; j <= degree; ++j) {
      if (j > 0) factorial *= j;
      c[static_cast<std::size_t>(j)] = Complex(u(rng), u(rng)) / factorial;
    }
    const AnalyticFunction p([c](Complex z) {
      Complex s = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
      return s;
    });
    for (Complex a : shifts) {
      // expanded coefficients of p(z + a)
      std::vector<Complex> e(c.size(), 0.0);
      for (int j = 0; j <= degree; ++j) {
        double binom = 1.0;
        for (int m = j; m >= 0; --m) {
          e[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(j)] * binom * std::pow(a, j - m);
          binom = binom * m / (j - m + 1);
        }
      }
      const auto shifted = shift_op(a)(p);
      for (double x : ctx.grid) {
        Complex expanded = 0.0;
        double scale = 1.0;
        for (int m = degree; m >= 0; --m) expanded = expanded * x + e[static_cast<std::size_t>(m)];
        for (int j = 0; j <= degree; ++j) scale += std::abs(c[static_cast<std::size_t>(j)]) * std::pow(x + std::abs(a), j);
        worst = std::max(worst, std::abs(shifted(x) - expanded) / scale);
      }
    }
  }
  for (double k : {-2.0, -0.7, 0.4, 1.3, 2.0}) {
    const AnalyticFunction w([k](Complex z) { return std::exp(kI * k * z); });
    for (Complex a : shifts) {
      const Complex factor = std::exp(kI * k * a);
      const AnalyticFunction expected([k, factor](Complex z) { return factor * std::exp(kI * k * z); });
      worst = std::max(worst, residual(shift_op(a)(w), expected, ctx.grid));
    }
  }
  return {worst, "e^{a d} on polynomials (degree <= 10) and exponentials, a in {+-i, +-i/2, 0.3+0.7i}"};
}

namespace detail {

inline std::vector<DifferenceOperator> random_operators(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 4);
  const Complex shifts[] = {0.0, 0.5 * kI, -0.5 * kI, kI, -kI};
  std::vector<DifferenceOperator> out;
  for (int i = 0; i < count; ++i) {
    std::vector<ShiftTerm> terms;
    for (int t = 0; t < 3; ++t) {
      const Complex c0(u(rng), u(rng));
      const Complex c1(u(rng), u(rng));
      terms.push_back({AnalyticFunction([c0, c1](Complex z) { return c0 + c1 * z; }), shifts[pick(rng)]});
    }
    out.emplace_back(std::move(terms));
  }
  return out;
}

}  // namespace detail

inline Measurement operator_algebra(const SuiteContext& ctx) {
  const auto ops = detail::random_operators(0x1f83d9ab, 9);
  const auto fs = random_analytic_functions(0x5be0cd19, 6);
  const Complex s(0.7, -0.2);
  const Complex t(-1.1, 0.4);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto& a = ops[static_cast<std::size_t>(3 * i)];
    const auto& b = ops[static_cast<std::size_t>(3 * i + 1)];
    const auto& c = ops[static_cast<std::size_t>(3 * i + 2)];
    const auto& f = fs[static_cast<std::size_t>(2 * i)];
    const auto& g = fs[static_cast<std::size_t>(2 * i + 1)];
    const auto nested = a(b(c(f)));
    worst = std::max(worst, residual(((a * b) * c)(f), nested, ctx.grid));
    worst = std::max(worst, residual((a * (b * c))(f), nested, ctx.grid));
    worst = std::max(worst, residual(a(s * f + t * g), s * a(f) + t * a(g), ctx.grid));
    worst = std::max(worst, residual((a + b)(f), a(f) + b(f), ctx.grid));
  }
  return {worst, "associativity of composition and linearity on random operators and functions"};
}

inline Measurement commutator_antisymmetry(const SuiteContext& ctx) {
  const auto ops = detail::random_operators(0xcbbb9d5d, 6);
  const auto fs = random_analytic_functions(0x629a292a, 3);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto& a = ops[static_cast<std::size_t>(2 * i)];
    const auto& b = ops[static_cast<std::size_t>(2 * i + 1)];
    const auto& f = fs[static_cast<std::size_t>(i)];
    worst = std::max(worst, residual(commutator(a, b)(f), -commutator(b, a)(f), ctx.grid));
  }
  return {worst, "[A,B] = -[B,A] on random operators"};
}

inline Measurement plane_wave_eigen(const SuiteContext& ctx) {
  const auto h0 = planewave::free_hamiltonian();
  double worst = 0.0;
  for (double chi : detail::rapidities()) {
    const auto state = planewave::PlaneWaveState::from_rapidity(chi);
    const auto xi = planewave::plane_wave(chi);
    worst = std::max(worst, residual(h0(xi), Complex(state.energy) * xi, ctx.grid));
  }
  return {worst, "cosh(i d) e^{i rho chi} = cosh(chi) e^{i rho chi}, |chi| <= 2"};
}

inline Measurement plane_wave_forms(const SuiteContext& ctx) {
  double worst = 0.0;
  for (double chi : detail::rapidities()) {
    worst = std::max(worst, residual(planewave::plane_wave_power_form(chi), planewave::plane_wave(chi), ctx.grid));
  }
  return {worst, "((p0 - p)/mc)^{-i rho} equals e^{i rho chi}"};
}

inline Measurement plane_wave_mass_shell(const SuiteContext&) {
  double worst = 0.0;
  for (double chi : detail::rapidities()) {
    worst = std::max(worst, std::abs(planewave::PlaneWaveState::from_rapidity(chi).mass_shell() - 1.0));
  }
  return {worst, "p0^2 - p^2 = (mc)^2 at each rapidity"};
}

inline Measurement free_limit_hamiltonian(const SuiteContext& ctx) {
  const auto h = rel::hamiltonian_rel(0.0, 0.0);
  const auto h0 = planewave::free_hamiltonian();
  const auto fs = random_analytic_functions(0x1b0f3c5a, 5);
  double worst = 0.0;
  for (const auto& f : fs) worst = std::max(worst, residual(h(f), h0(f), ctx.grid));
  return {worst, "interacting Hamiltonian at omega0 = g0 = 0 is cosh(i d)"};
}

}  // namespace fdosc::harness::checks
