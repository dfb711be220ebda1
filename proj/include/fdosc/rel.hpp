#pragma once

// Relativistic linear singular oscillator in the finite-difference
// (Compton-wavelength step) formulation. Dimensionless coordinate
// rho = x / lambda-bar, energies in units of mc^2, momenta in units of mc.
//
//   H = cosh(i d) + (omega0^2/2) rho^(2) e^{i d} + (g0 / rho^(2)) e^{i d},
//   rho^(2) = rho (rho + i).

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdosc/analytic_function.hpp"
#include "fdosc/difference_operator.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/nonrel.hpp"
#include "fdosc/specfun.hpp"

namespace fdosc::rel {

struct RelModel {
  double omega0;  ///< hbar*omega / mc^2
  double g0;      ///< m g / hbar^2
  double alpha;
  double nu;

  /// E_n / mc^2 = omega0 (2n + alpha + nu).
  double energy(int n) const { return omega0 * (2.0 * n + alpha + nu); }
  /// Lowest K0 weight (alpha + nu)/2.
  double bargmann_index() const { return 0.5 * (alpha + nu); }
  double casimir() const {
    const double k = bargmann_index();
    return k * (k - 1.0);
  }
};

inline RelModel make_rel_model(double omega0, double g0) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw CouplingError("relativistic model requires omega0 > 0");
  if (!(g0 > 0.0) || !std::isfinite(g0)) throw CouplingError("relativistic model requires g0 > 0");
  const double x = 8.0 * g0 * omega0 * omega0;
  if (x > 1.0) {
    throw CouplingError("relativistic model requires 8 g0 omega0^2 <= 1 (got " + std::to_string(x) + ")");
  }
  const double root = std::sqrt(1.0 - x);
  // (2/omega0^2)(1 - root) rewritten as 16 g0 / (1 + root) to avoid cancellation.
  const double alpha = 0.5 + 0.5 * std::sqrt(1.0 + 16.0 * g0 / (1.0 + root));
  const double nu = 0.5 + 0.5 * std::sqrt(1.0 + 2.0 / (omega0 * omega0) * (1.0 + root));
  return {omega0, g0, alpha, nu};
}

namespace detail {

inline AnalyticFunction rho() { return AnalyticFunction::identity(); }

/// (omega0^2/2) rho^(2) + g0 / rho^(2)
inline AnalyticFunction quasipotential(double omega0, double g0) {
  return AnalyticFunction(
      [omega0, g0](Complex z) {
        const Complex deg2 = generalized_degree(z, 2.0);
        if (deg2 == Complex(0.0)) {
          if (g0 == 0.0) return Complex(0.0);
          throw EvaluationError("relativistic potential singular at rho^(2) = 0");
        }
        return 0.5 * omega0 * omega0 * deg2 + g0 / deg2;
      },
      "poles at rho = 0 and rho = -i");
}

}  // namespace detail

/// Hamiltonian from raw couplings; (0, 0) gives the free cosh(i d).
inline DifferenceOperator hamiltonian_rel(double omega0, double g0) {
  const auto v = detail::quasipotential(omega0, g0);
  return DifferenceOperator({{AnalyticFunction::constant(0.5) + v, kI}, {AnalyticFunction::constant(0.5), -kI}});
}

inline DifferenceOperator hamiltonian_rel(const RelModel& m) { return hamiltonian_rel(m.omega0, m.g0); }

/// P = -[sinh(i d) + (omega0^2/2) rho^(2) e^{i d} + (g0/rho^(2)) e^{i d}], units of mc.
inline DifferenceOperator momentum_P(double omega0, double g0) {
  const auto v = detail::quasipotential(omega0, g0);
  return DifferenceOperator({{-(AnalyticFunction::constant(0.5) + v), kI}, {AnalyticFunction::constant(0.5), -kI}});
}

inline DifferenceOperator momentum_P(const RelModel& m) { return momentum_P(m.omega0, m.g0); }

struct LadderPair {
  DifferenceOperator minus;
  DifferenceOperator plus;
};

/// b^- = [e^{-(i/2)d} - omega0 e^{(i/2)d} (nu + i rho)(1 + alpha/(i rho))] / sqrt(2)
/// b^+ = [e^{-(i/2)d} - omega0 (nu - i rho)(1 - alpha/(i rho)) e^{(i/2)d}] / sqrt(2)
inline LadderPair ladder_b(const RelModel& m) {
  const double omega0 = m.omega0;
  const double alpha = m.alpha;
  const double nu = m.nu;
  const auto guard = [](Complex z) {
    if (z == Complex(0.0)) throw EvaluationError("ladder b: singular at rho = 0");
  };
  const AnalyticFunction lower_coeff(
      [=](Complex z) {
        guard(z);
        return (nu + kI * z) * (1.0 + alpha / (kI * z));
      },
      "pole at rho = 0");
  const AnalyticFunction upper_coeff(
      [=](Complex z) {
        guard(z);
        return (nu - kI * z) * (1.0 - alpha / (kI * z));
      },
      "pole at rho = 0");
  const Complex s = 1.0 / std::numbers::sqrt2;
  const auto half_down = shift_op(-0.5 * kI);
  const auto half_up = shift_op(0.5 * kI);
  return {s * (half_down - omega0 * (half_up * mul_op(lower_coeff))),
          s * (half_down - omega0 * (mul_op(upper_coeff) * half_up))};
}

/// Compact ladder form
///   B^{-/+} = [(omega0 rho +/- i P)^2 - 2 g0 / (rho^2 + 1)] / (2 omega0).
inline LadderPair ladder_B(const RelModel& m) {
  const double g0 = m.g0;
  const auto p = momentum_P(m);
  const auto position = mul_op(m.omega0 * detail::rho());
  const auto lower_root = position + kI * p;
  const auto upper_root = position - kI * p;
  const auto centre = mul_op(AnalyticFunction(
      [g0](Complex z) {
        const Complex den = z * z + 1.0;
        if (den == Complex(0.0)) throw EvaluationError("ladder B: singular at rho = +/- i");
        return -2.0 * g0 / den;
      },
      "poles at rho = +/- i"));
  const Complex scale = 1.0 / (2.0 * m.omega0);
  return {scale * (lower_root * lower_root + centre), scale * (upper_root * upper_root + centre)};
}

/// How the H^2 term enters the factorised form of the lowering operator.
enum class QuadraticTerm {
  kBare,             ///< - H^2 / (2 omega0)
  kMinusRestEnergy,  ///< - (H^2 - 1) / (2 omega0)
};

/// Lowering operator assembled from b^- and H:
///   i rho [sqrt(2) e^{-(i/2)d} b^- - H + omega0(alpha+nu)] + H/2 - (H^2 [- 1])/(2 omega0) + omega0 alpha nu.
/// With QuadraticTerm::kMinusRestEnergy this coincides with ladder_B().minus.
inline DifferenceOperator lowering_B_factorized(const RelModel& m, QuadraticTerm quadratic) {
  const auto h = hamiltonian_rel(m);
  const auto b = ladder_b(m);
  const auto id = DifferenceOperator::identity();
  const auto bracket =
      std::numbers::sqrt2 * (shift_op(-0.5 * kI) * b.minus) - h + (m.omega0 * (m.alpha + m.nu)) * id;
  auto squared = h * h;
  if (quadratic == QuadraticTerm::kMinusRestEnergy) squared = squared - id;
  return mul_op(kI * detail::rho()) * bracket + 0.5 * h - (1.0 / (2.0 * m.omega0)) * squared +
         (m.omega0 * m.alpha * m.nu) * id;
}

/// omega0 H {1 + (2/omega0^2)(H^2 - 1)}, the closed form of [B^-, B^+].
inline DifferenceOperator ladder_commutator_rhs(const RelModel& m) {
  const auto h = hamiltonian_rel(m);
  const auto id = DifferenceOperator::identity();
  const double w = m.omega0;
  return w * (h + (2.0 / (w * w)) * (h * (h * h - id)));
}

/// Scalar value of ladder_commutator_rhs on an eigenstate of energy e (mc^2).
inline double ladder_commutator_value(const RelModel& m, double e) {
  const double w = m.omega0;
  return w * e * (1.0 + 2.0 / (w * w) * (e * e - 1.0));
}

/// f(E) = [E + omega0(alpha - nu - 1)][E + omega0(nu - alpha - 1)].
inline double spectral_function(const RelModel& m, double e) {
  return (e + m.omega0 * (m.alpha - m.nu - 1.0)) * (e + m.omega0 * (m.nu - m.alpha - 1.0));
}

enum class CoefficientForm {
  kClosure,       ///< n (n + alpha + nu - 1): the form su(1,1) closure requires
  kShiftedByOne,  ///< n (n + alpha + nu)
};

/// b_n = 2 omega0 sqrt(n (n + alpha + nu [- 1]) (n + alpha - 1/2)(n + nu - 1/2)).
inline double ladder_coefficient(const RelModel& m, int n, CoefficientForm form = CoefficientForm::kClosure) {
  const double shift = form == CoefficientForm::kClosure ? -1.0 : 0.0;
  return 2.0 * m.omega0 * std::sqrt(n * (n + m.alpha + m.nu + shift) * (n + m.alpha - 0.5) * (n + m.nu - 0.5));
}

/// kappa_n = sqrt(n (n + alpha + nu [- 1])).
inline double kappa(const RelModel& m, int n, CoefficientForm form = CoefficientForm::kClosure) {
  const double shift = form == CoefficientForm::kClosure ? -1.0 : 0.0;
  return std::sqrt(n * (n + m.alpha + m.nu + shift));
}

/// N_n = 1 / (b_1 ... b_n) in closed form:
/// (2 omega0)^{-n} / sqrt(n! (alpha + nu [+ 1])_n (alpha + 1/2)_n (nu + 1/2)_n).
inline double ladder_normalization(const RelModel& m, int n, CoefficientForm form = CoefficientForm::kClosure) {
  const double base = form == CoefficientForm::kClosure ? m.alpha + m.nu : m.alpha + m.nu + 1.0;
  const double log_inv = n * std::log(2.0 * m.omega0) +
                         0.5 * (std::lgamma(n + 1.0) + std::log(pochhammer(base, n)) +
                                std::log(pochhammer(m.alpha + 0.5, n)) + std::log(pochhammer(m.nu + 0.5, n)));
  return std::exp(-log_inv);
}

struct RelEigenState {
  int n;
  double energy_mc2;
  AnalyticFunction wavefunction;
  bool built_by_ladder;
};

/// phi_n(rho) = (-rho)^(alpha) omega0^{i rho} Gamma(nu + i rho) S_n(rho^2; alpha, nu, 1/2),
/// (-rho)^(alpha) = i^alpha Gamma(alpha + i rho) / Gamma(i rho), all Gamma factors
/// combined in log space. Unnormalised; with this S_n convention B^+ phi_n = -2 omega0 phi_{n+1}.
inline RelEigenState eigenfunction_rel(const RelModel& m, int n) {
  if (n < 0) throw std::invalid_argument("eigenfunction_rel: n must be non-negative");
  const double alpha = m.alpha;
  const double nu = m.nu;
  const double log_w = std::log(m.omega0);
  const Complex phase = kI * (std::numbers::pi * alpha / 2.0);
  AnalyticFunction phi(
      [=](Complex z) {
        const Complex iz = kI * z;
        const Complex log_prefactor =
            phase + log_gamma(alpha + iz) - log_gamma(iz) + iz * log_w + log_gamma(nu + iz);
        return std::exp(log_prefactor) * cdhahn(n, z, alpha, nu, 0.5);
      },
      "gamma-function poles at rho = i k (k = 0, 1, ...) and rho = i (alpha + k), i (nu + k)");
  return {n, m.energy(n), phi, false};
}

/// N_n (B^+)^n phi_0 with N_n = 1/(b_1 ... b_n) (closure form of b_k).
inline RelEigenState ladder_state(const RelModel& m, int n) {
  if (n < 0) throw std::invalid_argument("ladder_state: n must be non-negative");
  const auto raise = ladder_B(m).plus;
  const auto built = power(raise, n)(eigenfunction_rel(m, 0).wavefunction);
  return {n, m.energy(n), Complex(ladder_normalization(m, n)) * built, true};
}

/// Generators K0 = H/(2 omega0), K^- = B^- f^{-1/2}(H), K^+ = f^{-1/2}(H) B^+ acting
/// on eigenstates. f^{-1/2}(H) is applied as the scalar f(E)^{-1/2} of the state
/// it acts on: the input state for K^-, the output state for K^+.
class RelSu11 {
 public:
  explicit RelSu11(const RelModel& m)
      : model_(m), h_(hamiltonian_rel(m)), ladder_(ladder_B(m)) {}

  const RelModel& model() const { return model_; }

  /// f(E_n)^{-1/2}; throws SpectralError when f(E_n) <= 0.
  double inverse_sqrt_f(int n) const {
    const double f = spectral_function(model_, model_.energy(n));
    if (!(f > 0.0)) {
      throw SpectralError("spectral function f(E_" + std::to_string(n) + ") = " + std::to_string(f) +
                          " is not positive");
    }
    return 1.0 / std::sqrt(f);
  }

  AnalyticFunction k0(const AnalyticFunction& psi) const { return Complex(1.0 / (2.0 * model_.omega0)) * h_(psi); }

  /// K^- on the eigenstate with index n.
  AnalyticFunction k_minus(const AnalyticFunction& psi_n, int n) const {
    return Complex(inverse_sqrt_f(n)) * ladder_.minus(psi_n);
  }

  /// K^+ on the eigenstate with index n.
  AnalyticFunction k_plus(const AnalyticFunction& psi_n, int n) const {
    return Complex(inverse_sqrt_f(n + 1)) * ladder_.plus(psi_n);
  }

 private:
  RelModel model_;
  DifferenceOperator h_;
  LadderPair ladder_;
};

inline RelSu11 su11_rel(const RelModel& m) { return RelSu11(m); }

/// |(alpha + nu - 1/omega0) - (d + 1)| for each omega0 at fixed g0.
inline std::vector<double> nonrel_limit(double g0, const std::vector<double>& omega0s) {
  const double d = nonrel::make_model(g0).d;
  std::vector<double> out;
  out.reserve(omega0s.size());
  for (double w : omega0s) {
    const auto m = make_rel_model(w, g0);
    out.push_back(std::abs((m.alpha + m.nu - 1.0 / w) - (d + 1.0)));
  }
  return out;
}

}  // namespace fdosc::rel
