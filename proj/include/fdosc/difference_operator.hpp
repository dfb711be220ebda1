#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "fdosc/analytic_function.hpp"
#include "fdosc/errors.hpp"
#include "fdosc/sample_grid.hpp"

namespace fdosc {

/// One term c(rho) * e^{a d/drho}: f(rho) -> c(rho) f(rho + a).
struct ShiftTerm {
  AnalyticFunction coeff;
  Complex shift;
};

/// Finite linear combination of coefficient-times-complex-shift terms.
///
/// Terms are kept merged by shift (one term per distinct shift) and sorted,
/// so composing and applying stay cheap and the term order is deterministic.
/// Application is lazy: the result is an AnalyticFunction that evaluates the
/// operand once per distinct shift.
class DifferenceOperator {
 public:
  DifferenceOperator() = default;

  explicit DifferenceOperator(std::vector<ShiftTerm> terms) : terms_(merge(std::move(terms))) {}

  static DifferenceOperator identity() { return DifferenceOperator({{AnalyticFunction::constant(1.0), 0.0}}); }

  std::span<const ShiftTerm> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AnalyticFunction apply(const AnalyticFunction& f) const {
    if (terms_.empty()) return AnalyticFunction::constant(0.0);
    auto terms = terms_;
    return AnalyticFunction(
        [terms, f](Complex z) {
          Complex sum = 0.0;
          for (const auto& t : terms) sum += t.coeff(z) * f(z + t.shift);
          return sum;
        },
        f.domain_note());
  }

  AnalyticFunction operator()(const AnalyticFunction& f) const { return apply(f); }

  /// Formal adjoint on L^2(R): (c e^{a d})^+ = e^{-conj(a) d} conj-reflected(c).
  DifferenceOperator adjoint() const {
    std::vector<ShiftTerm> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      const Complex s = -std::conj(t.shift);
      out.push_back({t.coeff.reflected().shifted(s), s});
    }
    return DifferenceOperator(std::move(out));
  }

  friend DifferenceOperator operator+(const DifferenceOperator& a, const DifferenceOperator& b) {
    std::vector<ShiftTerm> all(a.terms_.begin(), a.terms_.end());
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return DifferenceOperator(std::move(all));
  }

  friend DifferenceOperator operator*(Complex s, const DifferenceOperator& a) {
    std::vector<ShiftTerm> out;
    out.reserve(a.terms_.size());
    for (const auto& t : a.terms_) out.push_back({s * t.coeff, t.shift});
    return DifferenceOperator(std::move(out));
  }

  friend DifferenceOperator operator-(const DifferenceOperator& a) { return Complex(-1.0) * a; }
  friend DifferenceOperator operator-(const DifferenceOperator& a, const DifferenceOperator& b) { return a + (-b); }

  /// Composition: (A B) f = A (B f).
  friend DifferenceOperator operator*(const DifferenceOperator& a, const DifferenceOperator& b) {
    std::vector<ShiftTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        out.push_back({ta.coeff * tb.coeff.shifted(ta.shift), ta.shift + tb.shift});
      }
    }
    return DifferenceOperator(std::move(out));
  }

 private:
  static bool shift_less(Complex x, Complex y) {
    if (x.imag() != y.imag()) return x.imag() < y.imag();
    return x.real() < y.real();
  }

  static std::vector<ShiftTerm> merge(std::vector<ShiftTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const ShiftTerm& x, const ShiftTerm& y) { return shift_less(x.shift, y.shift); });
    std::vector<ShiftTerm> out;
    for (auto& t : terms) {
      if (!out.empty() && out.back().shift == t.shift) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const ShiftTerm& t) {
      auto c = t.coeff.constant_value();
      return c && *c == Complex(0.0);
    });
    return out;
  }

  std::vector<ShiftTerm> terms_;
};

/// f(rho) -> f(rho + a)
inline DifferenceOperator shift_op(Complex a) { return DifferenceOperator({{AnalyticFunction::constant(1.0), a}}); }

/// f(rho) -> c(rho) f(rho)
inline DifferenceOperator mul_op(const AnalyticFunction& c) { return DifferenceOperator({{c, 0.0}}); }
inline DifferenceOperator mul_op(Complex c) { return mul_op(AnalyticFunction::constant(c)); }

inline DifferenceOperator compose(const DifferenceOperator& a, const DifferenceOperator& b) { return a * b; }

inline DifferenceOperator commutator(const DifferenceOperator& a, const DifferenceOperator& b) {
  return a * b - b * a;
}

inline DifferenceOperator power(const DifferenceOperator& a, int n) {
  DifferenceOperator result = DifferenceOperator::identity();
  for (int i = 0; i < n; ++i) result = a * result;
  return result;
}

/// max over the grid of |lhs - rhs| / (1 + |rhs|).
inline double residual(const AnalyticFunction& lhs, const AnalyticFunction& rhs, const SampleGrid& grid) {
  double worst = 0.0;
  for (double x : grid) {
    Complex l;
    Complex r;
    try {
      l = lhs(x);
      r = rhs(x);
    } catch (const EvaluationError& e) {
      throw EvaluationError("residual: evaluation failed at " + std::to_string(x) + ": " + e.what());
    }
    const double res = std::abs(l - r) / (1.0 + std::abs(r));
    if (!std::isfinite(res)) throw EvaluationError("residual: non-finite value at " + std::to_string(x));
    worst = std::max(worst, res);
  }
  return worst;
}

inline double residual(const DifferenceOperator& a, const DifferenceOperator& b, const AnalyticFunction& f,
                       const SampleGrid& grid) {
  return residual(a(f), b(f), grid);
}

/// f divided by its largest modulus on the grid.
inline AnalyticFunction unit_scaled(const AnalyticFunction& f, const SampleGrid& grid) {
  double peak = 0.0;
  for (double x : grid) peak = std::max(peak, std::abs(f(x)));
  if (!(peak > 0.0) || !std::isfinite(peak)) throw EvaluationError("unit_scaled: function vanishes or overflows on grid");
  return Complex(1.0 / peak) * f;
}

}  // namespace fdosc
