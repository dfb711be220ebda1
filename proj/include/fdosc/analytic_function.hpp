#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace fdosc {

using Complex = std::complex<double>;

/// Immutable complex-valued function of one complex variable.
///
/// Values are cheap to copy (the callable is shared). Constants are tracked
/// so that operator algebra can fold them instead of stacking closures.
class AnalyticFunction {
 public:
  using Fn = std::function<Complex(Complex)>;

  AnalyticFunction() : AnalyticFunction(constant(0.0)) {}

  explicit AnalyticFunction(Fn fn, std::string domain_note = {})
      : fn_(std::make_shared<const Fn>(std::move(fn))), note_(std::move(domain_note)) {}

  static AnalyticFunction constant(Complex value) {
    AnalyticFunction f([value](Complex) { return value; }, "entire");
    f.constant_ = value;
    return f;
  }

  static AnalyticFunction identity() {
    return AnalyticFunction([](Complex z) { return z; }, "entire");
  }

  Complex operator()(Complex z) const {
    if (constant_) return *constant_;
    return (*fn_)(z);
  }

  const std::string& domain_note() const { return note_; }
  std::optional<Complex> constant_value() const { return constant_; }

  /// z -> f(z + a)
  AnalyticFunction shifted(Complex a) const {
    if (constant_ || a == Complex(0.0)) return *this;
    auto fn = fn_;
    return AnalyticFunction([fn, a](Complex z) { return (*fn)(z + a); }, note_);
  }

  /// Schwarz reflection z -> conj(f(conj z)); the coefficient-level part of
  /// a formal adjoint.
  AnalyticFunction reflected() const {
    if (constant_) return constant(std::conj(*constant_));
    auto fn = fn_;
    return AnalyticFunction([fn](Complex z) { return std::conj((*fn)(std::conj(z))); }, note_);
  }

  friend AnalyticFunction operator+(const AnalyticFunction& f, const AnalyticFunction& g) {
    if (f.constant_ && g.constant_) return constant(*f.constant_ + *g.constant_);
    if (f.constant_ && *f.constant_ == Complex(0.0)) return g;
    if (g.constant_ && *g.constant_ == Complex(0.0)) return f;
    return AnalyticFunction([f, g](Complex z) { return f(z) + g(z); }, join_notes(f, g));
  }

  friend AnalyticFunction operator*(const AnalyticFunction& f, const AnalyticFunction& g) {
    if (f.constant_) return *f.constant_ * g;
    if (g.constant_) return *g.constant_ * f;
    return AnalyticFunction([f, g](Complex z) { return f(z) * g(z); }, join_notes(f, g));
  }

  friend AnalyticFunction operator*(Complex s, const AnalyticFunction& f) {
    if (f.constant_) return constant(s * *f.constant_);
    if (s == Complex(0.0)) return constant(0.0);
    if (s == Complex(1.0)) return f;
    return AnalyticFunction([s, f](Complex z) { return s * f(z); }, f.note_);
  }

  friend AnalyticFunction operator*(const AnalyticFunction& f, Complex s) { return s * f; }
  friend AnalyticFunction operator-(const AnalyticFunction& f) { return Complex(-1.0) * f; }
  friend AnalyticFunction operator-(const AnalyticFunction& f, const AnalyticFunction& g) { return f + (-g); }

 private:
  static std::string join_notes(const AnalyticFunction& f, const AnalyticFunction& g) {
    if (f.note_.empty() || f.note_ == "entire") return g.note_;
    if (g.note_.empty() || g.note_ == "entire" || g.note_ == f.note_) return f.note_;
    return f.note_ + "; " + g.note_;
  }

  std::shared_ptr<const Fn> fn_;
  std::string note_;
  std::optional<Complex> constant_;
};

}  // namespace fdosc
