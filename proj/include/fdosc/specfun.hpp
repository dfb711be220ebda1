#pragma once

// Complex special functions used by the closed-form wavefunctions:
// gamma / log-gamma, Pochhammer symbols, the finite-difference
// "generalized degree", associated Laguerre and continuous dual Hahn
// polynomials.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fdosc/errors.hpp"

namespace fdosc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

namespace detail {

// Lanczos approximation, g = 7, nine terms.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_gamma_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

inline std::string format_point(Complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

// sin(pi z) with the real part reduced exactly to [-1/2, 1/2], so the
// relative error stays small next to the zeros.
inline Complex sin_pi(Complex z) {
  const double k = std::round(z.real());
  const double r = z.real() - k;
  const double sign = (static_cast<long long>(k) % 2 == 0) ? 1.0 : -1.0;
  const double py = std::numbers::pi * z.imag();
  const double pr = std::numbers::pi * r;
  return sign * Complex(std::sin(pr) * std::cosh(py), std::cos(pr) * std::sinh(py));
}

// log sin(pi z), any branch; stays finite for large |Im z|.
inline Complex log_sin_pi(Complex z) {
  const double y = z.imag();
  if (std::abs(y) < 20.0) return std::log(sin_pi(z));
  const double k = std::round(z.real());
  const Complex zr(z.real() - k, y);
  const Complex parity = (static_cast<long long>(k) % 2 == 0) ? Complex(0.0) : Complex(0.0, std::numbers::pi);
  const double pi = std::numbers::pi;
  if (y > 0.0) {
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
    return std::log(Complex(0.0, 0.5)) - kI * pi * zr + std::log(1.0 - std::exp(2.0 * kI * pi * zr)) + parity;
  }
  // sin(pi z) = (-i/2) e^{i pi z} (1 - e^{-2 i pi z})
  return std::log(Complex(0.0, -0.5)) + kI * pi * zr + std::log(1.0 - std::exp(-2.0 * kI * pi * zr)) + parity;
}

// log Gamma(z) for Re z >= 1/2.
inline Complex log_gamma_right(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace detail

/// Gamma function. Reflection is used for Re z < 1/2.
inline Complex gamma(Complex z) {
  if (detail::is_gamma_pole(z)) throw PoleError("gamma: pole at " + detail::format_point(z));
  if (z.real() < 0.5) {
    return std::numbers::pi / (detail::sin_pi(z) * gamma(1.0 - z));
  }
  return std::exp(detail::log_gamma_right(z));
}

/// log Gamma(z). Continuous on Re z > 0; on the left half-plane the branch
/// of the imaginary part is unspecified (only exp(log_gamma) is meaningful).
inline Complex log_gamma(Complex z) {
  if (detail::is_gamma_pole(z)) throw PoleError("log_gamma: pole at " + detail::format_point(z));
  if (z.real() < 0.5) {
    return std::log(std::numbers::pi) - detail::log_sin_pi(z) - detail::log_gamma_right(1.0 - z);
  }
  return detail::log_gamma_right(z);
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
template <class T>
T pochhammer(T a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: n must be non-negative");
  T result(1.0);
  for (int k = 0; k < n; ++k) result *= a + static_cast<double>(k);
  return result;
}

/// Generalized degree rho^(lam) = i^lam Gamma(lam - i rho) / Gamma(-i rho),
/// with i^lam = exp(i pi lam / 2). For integer lam >= 0 this is the product
/// rho (rho + i) ... (rho + (lam-1) i).
inline Complex generalized_degree(Complex rho, Complex lam) {
  if (lam.imag() == 0.0 && lam.real() >= 0.0 && lam.real() == std::floor(lam.real()) && lam.real() <= 64.0) {
    const int n = static_cast<int>(lam.real());
    Complex result = 1.0;
    for (int k = 0; k < n; ++k) result *= rho + kI * static_cast<double>(k);
    return result;
  }
  const Complex phase = kI * std::numbers::pi * lam / 2.0;
  return std::exp(phase + log_gamma(lam - kI * rho) - log_gamma(-kI * rho));
}

/// Associated Laguerre polynomial L_n^d(y) by the three-term recurrence.
/// Generic in the argument type so it also evaluates on Taylor jets.
template <class T>
T laguerre(int n, double d, const T& y) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be non-negative");
  T prev = y * 0.0 + 1.0;
  if (n == 0) return prev;
  T cur = (1.0 + d) - y;
  for (int k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    T next = (((2.0 * kk + 1.0 + d) - y) * cur - (kk + d) * prev) / (kk + 1.0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Continuous dual Hahn polynomial S_n(x^2; a, b, c) in the normalisation
/// S_n = (a+b)_n (a+c)_n 3F2(-n, a+ix, a-ix; a+b, a+c; 1).
///
/// Evaluated through the monic recurrence in y = x^2,
///   y p_k = p_{k+1} + (A_k + C_k - a^2) p_k + A_{k-1} C_k p_{k-1},
///   A_k = (k+a+b)(k+a+c),  C_k = k (k+b+c-1),
/// with S_n = (-1)^n p_n. Works for real or complex x.
template <class T>
T cdhahn(int n, const T& x, double a, double b, double c) {
  if (n < 0) throw std::invalid_argument("cdhahn: n must be non-negative");
  for (int k = 0; k < n; ++k) {
    if (a + b + k == 0.0 || a + c + k == 0.0) {
      throw ParameterError("cdhahn: vanishing denominator Pochhammer (a+b or a+c is a non-positive integer)");
    }
  }
  const T y = x * x;
  const auto big_a = [&](int k) { return (k + a + b) * (k + a + c); };
  const auto big_c = [&](int k) { return k * (k + b + c - 1.0); };
  T prev = y * 0.0;
  T cur = prev + 1.0;
  for (int k = 0; k < n; ++k) {
    T next = (y - (big_a(k) + big_c(k) - a * a)) * cur;
    if (k > 0) next -= (big_a(k - 1) * big_c(k)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return (n % 2 == 0) ? cur : -cur;
}

}  // namespace fdosc
