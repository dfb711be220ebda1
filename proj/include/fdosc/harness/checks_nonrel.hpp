#pragma once

// Non-relativistic singular oscillator: factorisation, ladder algebra,
// eigenfunctions and the independent matrix spectrum.

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fdosc/differential_operator.hpp"
#include "fdosc/harness/measure.hpp"
#include "fdosc/harness/test_functions.hpp"
#include "fdosc/nonrel.hpp"

namespace fdosc::harness::checks {

namespace detail {

inline std::vector<JetFunction> nonrel_states(const SuiteContext& ctx, int count) {
  std::vector<JetFunction> out;
  for (int n = 0; n < count; ++n) out.push_back(nonrel::eigenfunction(ctx.nonrel, n).wavefunction);
  return out;
}

/// Random smooth functions followed by the first n_max + 1 eigenfunctions.
inline std::vector<JetFunction> nonrel_probes(const SuiteContext& ctx) {
  auto out = random_smooth_functions(0x243f6a88, 20);
  for (auto& s : nonrel_states(ctx, ctx.n_max + 1)) out.push_back(s);
  return out;
}

inline double worst_over(const std::vector<JetFunction>& fs, const DifferentialOperator& a,
                         const DifferentialOperator& b, const SampleGrid& grid) {
  double worst = 0.0;
  for (const auto& f : fs) worst = std::max(worst, residual(a, b, f, grid));
  return worst;
}

}  // namespace detail

inline Measurement nonrel_eigen(const SuiteContext& ctx) {
  const auto h = nonrel::hamiltonian(ctx.nonrel);
  double worst = 0.0;
  for (int n = 0; n <= ctx.n_max; ++n) {
    const auto s = nonrel::eigenfunction(ctx.nonrel, n);
    worst = std::max(worst, residual(h(s.wavefunction), s.energy * s.wavefunction, ctx.grid));
  }
  return {worst, "H psi_n = (2n + d + 1) psi_n, n <= " + std::to_string(ctx.n_max)};
}

inline Measurement nonrel_factorization(const SuiteContext& ctx) {
  const auto c = nonrel::ladder_c(ctx.nonrel);
  const auto rhs = c.plus * c.minus + mul_op(ctx.nonrel.d + 1.0);
  const double worst = detail::worst_over(detail::nonrel_probes(ctx), nonrel::hamiltonian(ctx.nonrel), rhs, ctx.grid);
  return {worst, "H = c+ c- + d + 1 on 20 random functions and the eigenfunctions"};
}

inline Measurement nonrel_c_commutator(const SuiteContext& ctx) {
  const auto c = nonrel::ladder_c(ctx.nonrel);
  const auto rhs = DifferentialOperator::identity() + mul_op((ctx.nonrel.d + 0.5) * nonrel::detail::inverse_power(2));
  const double worst = detail::worst_over(detail::nonrel_probes(ctx), commutator(c.minus, c.plus), rhs, ctx.grid);
  return {worst, "[c-, c+] = 1 + (d + 1/2)/xi^2"};
}

inline Measurement nonrel_xi_c_commutator(const SuiteContext& ctx) {
  const auto& m = ctx.nonrel;
  const auto h = nonrel::hamiltonian(m);
  const auto xc = mul_op(nonrel::detail::coordinate()) * nonrel::ladder_c(m).minus;
  const double r2 = std::numbers::sqrt2;
  const auto rhs = -2.0 * (xc - (1.0 / r2) * h + mul_op((m.d + 1.0) / r2));
  const double worst = detail::worst_over(detail::nonrel_probes(ctx), commutator(h, xc), rhs, ctx.grid);
  return {worst, "[H, xi c-] = -2 (xi c- - H/sqrt2 + (d+1)/sqrt2)"};
}

inline Measurement nonrel_lowering_forms(const SuiteContext& ctx) {
  const auto a = nonrel::ladder_A(ctx.nonrel);
  const double worst = detail::worst_over(detail::nonrel_probes(ctx), a.minus, a.minus_from_c, ctx.grid);
  return {worst, "(a-)^2 - g0/xi^2 = sqrt2 xi c- - H + d + 1"};
}

inline Measurement nonrel_ladder_commutators(const SuiteContext& ctx) {
  const auto h = nonrel::hamiltonian(ctx.nonrel);
  const auto a = nonrel::ladder_A(ctx.nonrel);
  const auto probes = detail::nonrel_probes(ctx);
  const double lower = detail::worst_over(probes, commutator(h, a.minus), -2.0 * a.minus, ctx.grid);
  const double upper = detail::worst_over(probes, commutator(h, a.plus), 2.0 * a.plus, ctx.grid);
  return {std::max(lower, upper),
          "[H, A-] = -2 A- (" + num(lower) + "), [H, A+] = 2 A+ (" + num(upper) + ")"};
}

inline Measurement nonrel_su11_closure(const SuiteContext& ctx) {
  const auto k = nonrel::su11_generators(ctx.nonrel);
  const auto probes = detail::nonrel_probes(ctx);
  double worst = detail::worst_over(probes, commutator(k.k0, k.k_plus), k.k_plus, ctx.grid);
  worst = std::max(worst, detail::worst_over(probes, commutator(k.k0, k.k_minus), -k.k_minus, ctx.grid));
  worst = std::max(worst, detail::worst_over(probes, commutator(k.k_minus, k.k_plus), 2.0 * k.k0, ctx.grid));
  return {worst, "[K0, K+-] = +-K+-, [K-, K+] = 2 K0"};
}

inline Measurement nonrel_casimir(const SuiteContext& ctx) {
  const auto& m = ctx.nonrel;
  const auto cas = nonrel::casimir_operator(m);
  const double expected = m.casimir();
  const double pointwise = detail::worst_over(detail::nonrel_probes(ctx), cas, mul_op(expected), ctx.grid);
  double constancy = 0.0;
  for (const auto& psi : detail::nonrel_states(ctx, ctx.n_max + 1)) {
    const double c = projected_ratio(cas(psi), psi, ctx.grid).real();
    constancy = std::max(constancy, relative_gap(c, expected));
  }
  return {std::max(pointwise, constancy), "K0(K0-1) - K+K- = k(k-1) = " + num(expected) + " with k = (d+1)/2; " +
                                              "pointwise " + num(pointwise) + ", spread over states " +
                                              num(constancy)};
}

inline Measurement nonrel_ground_annihilation(const SuiteContext& ctx) {
  const auto psi0 = nonrel::eigenfunction(ctx.nonrel, 0).wavefunction;
  const auto zero = JetFunction::constant(0.0);
  const double c = residual(nonrel::ladder_c(ctx.nonrel).minus(psi0), zero, ctx.grid);
  const double a = residual(nonrel::ladder_A(ctx.nonrel).minus(psi0), zero, ctx.grid);
  return {std::max(c, a), "c- psi_0 = 0 (" + num(c) + "), A- psi_0 = 0 (" + num(a) + ")"};
}

inline Measurement nonrel_ladder_coefficients(const SuiteContext& ctx) {
  const auto& m = ctx.nonrel;
  const auto k = nonrel::su11_generators(m);
  const auto states = detail::nonrel_states(ctx, ctx.n_max + 1);
  double worst = 0.0;
  double sign_up = 0.0;
  for (int n = 0; n < ctx.n_max; ++n) {
    const double kappa = std::sqrt((n + 1.0) * (n + m.d + 1.0));
    const double up = projected_ratio(k.k_plus(states[static_cast<std::size_t>(n)]),
                                      states[static_cast<std::size_t>(n) + 1], ctx.grid)
                          .real();
    const double down = projected_ratio(k.k_minus(states[static_cast<std::size_t>(n) + 1]),
                                        states[static_cast<std::size_t>(n)], ctx.grid)
                            .real();
    worst = std::max({worst, relative_gap(std::abs(up), kappa), relative_gap(std::abs(down), kappa)});
    sign_up = up;
  }
  return {worst, "|K+- ratios| = sqrt((n+1)(n+d+1)) on normalised states; K+ ratio sign " +
                     std::string(sign_up < 0 ? "negative" : "positive")};
}

inline Measurement nonrel_ladder_reconstruction(const SuiteContext& ctx) {
  const auto& m = ctx.nonrel;
  const auto kp = nonrel::su11_generators(m).k_plus;
  auto built = nonrel::eigenfunction(m, 0).wavefunction;
  double worst = 0.0;
  std::string ratios;
  for (int n = 1; n <= ctx.n_max; ++n) {
    built = kp(built);
    const auto target = nonrel::eigenfunction(m, n).wavefunction;
    const auto stats = ratio_stats(built, target, ctx.grid);
    // gamma_n = 1/sqrt(n! (d+1)_n)
    const double gamma_n = std::exp(-0.5 * (std::lgamma(n + 1.0) + std::lgamma(n + m.d + 1.0) - std::lgamma(m.d + 1.0)));
    worst = std::max({worst, stats.spread, relative_gap(std::abs(stats.mean.real() * gamma_n), 1.0)});
    if (n == ctx.n_max) ratios = num(stats.mean.real() * gamma_n);
  }
  return {worst, "gamma_n (K+)^n psi_0 proportional to psi_n; normalised ratio at n = " +
                     std::to_string(ctx.n_max) + ": " + ratios};
}

inline Measurement nonrel_normalization(const SuiteContext& ctx) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double worst = 0.0;
  for (int n = 0; n <= ctx.n_max; ++n) {
    const auto psi = nonrel::eigenfunction(ctx.nonrel, n).wavefunction;
    const auto density = [&psi](double x) {
      if (!(x > 0.0) || x > 60.0) return 0.0;
      const double v = psi(x);
      return v * v;
    };
    const double norm = integrator.integrate(density, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
    worst = std::max(worst, std::abs(norm - 1.0));
  }
  return {worst, "integral of psi_n^2 over (0, inf) equals 1 (exp-sinh quadrature)"};
}

namespace detail {

inline std::vector<double> oracle_levels(const SuiteContext& ctx) {
  return nonrel::matrix_oracle(ctx.nonrel, 20.0, 4000, 5);
}

}  // namespace detail

inline Measurement nonrel_matrix_spectrum(const SuiteContext& ctx) {
  const auto levels = detail::oracle_levels(ctx);
  double worst = 0.0;
  for (int n = 0; n < 5; ++n) worst = std::max(worst, relative_gap(levels[static_cast<std::size_t>(n)], ctx.nonrel.energy(n)));
  return {worst, "finite-difference matrix (4000 nodes on [1e-3, 20]) vs 2n + d + 1, n <= 4; E_0 = " +
                     num(levels[0]) + ", spacing E_1 - E_0 = " + num(levels[1] - levels[0])};
}

inline Measurement nonrel_printed_spectrum(const SuiteContext& ctx) {
  const auto levels = detail::oracle_levels(ctx);
  const double d = ctx.nonrel.d;
  double printed = 0.0;
  double correct = 0.0;
  for (int n = 0; n < 5; ++n) {
    const double e = levels[static_cast<std::size_t>(n)];
    printed = std::max(printed, relative_gap(e, 2.0 * d + n + 1.0));
    correct = std::max(correct, relative_gap(e, 2.0 * n + d + 1.0));
  }
  Measurement out{printed, "spectrum written as 2d + n + 1 misses the matrix levels by " + num(printed) +
                               "; 2n + d + 1 matches to " + num(correct)};
  out.discrepancy = "non-relativistic spectrum: the form 2d + n + 1 is a misprint; the matrix oracle confirms "
                    "E_n = 2n + d + 1 (relative gap " + num(correct) + " vs " + num(printed) + ")";
  return out;
}

}  // namespace fdosc::harness::checks
