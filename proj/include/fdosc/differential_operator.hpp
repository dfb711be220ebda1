#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdosc/errors.hpp"
#include "fdosc/sample_grid.hpp"
#include "fdosc/taylor.hpp"

namespace fdosc {

/// Real function of a real variable that can report its Taylor jet at any
/// point. The carrier for non-relativistic wavefunctions and coefficients.
class JetFunction {
 public:
  using Fn = std::function<Taylor(double, int)>;

  JetFunction() : JetFunction(constant(0.0)) {}
  explicit JetFunction(Fn fn) : fn_(std::make_shared<const Fn>(std::move(fn))) {}

  /// Wrap a callable that is generic over double and Taylor.
  template <class F>
  static JetFunction from_expression(F f) {
    return JetFunction([f](double x, int order) { return Taylor(f(Taylor::variable(x, order))); });
  }

  static JetFunction constant(double v) {
    JetFunction f([v](double, int order) { return Taylor(v, order); });
    f.constant_ = v;
    return f;
  }

  double operator()(double x) const { return jet(x, 0).value(); }
  Taylor jet(double x, int order) const {
    if (constant_) return Taylor(*constant_, order);
    return (*fn_)(x, order);
  }
  std::optional<double> constant_value() const { return constant_; }

  JetFunction derivative(int k) const {
    if (k == 0) return *this;
    if (constant_) return constant(0.0);
    auto fn = fn_;
    return JetFunction([fn, k](double x, int order) { return (*fn)(x, order + k).differentiated(k); });
  }

  friend JetFunction operator+(const JetFunction& f, const JetFunction& g) {
    if (f.constant_ && g.constant_) return constant(*f.constant_ + *g.constant_);
    if (f.constant_ && *f.constant_ == 0.0) return g;
    if (g.constant_ && *g.constant_ == 0.0) return f;
    return JetFunction([f, g](double x, int order) { return f.jet(x, order) + g.jet(x, order); });
  }
  friend JetFunction operator*(const JetFunction& f, const JetFunction& g) {
    if (f.constant_) return *f.constant_ * g;
    if (g.constant_) return *g.constant_ * f;
    return JetFunction([f, g](double x, int order) { return f.jet(x, order) * g.jet(x, order); });
  }
  friend JetFunction operator*(double s, const JetFunction& f) {
    if (f.constant_) return constant(s * *f.constant_);
    if (s == 0.0) return constant(0.0);
    if (s == 1.0) return f;
    return JetFunction([s, f](double x, int order) { return f.jet(x, order) * s; });
  }
  friend JetFunction operator-(const JetFunction& f) { return -1.0 * f; }
  friend JetFunction operator-(const JetFunction& f, const JetFunction& g) { return f + (-g); }

 private:
  std::shared_ptr<const Fn> fn_;
  std::optional<double> constant_;
};

/// One term c(x) d^k/dx^k.
struct DerivativeTerm {
  JetFunction coeff;
  int order;
};

/// Linear differential operator sum_k c_k(x) d^k/dx^k with exact
/// (jet-based) application and Leibniz-rule composition.
class DifferentialOperator {
 public:
  DifferentialOperator() = default;
  explicit DifferentialOperator(std::vector<DerivativeTerm> terms) : terms_(merge(std::move(terms))) {}

  static DifferentialOperator identity() { return DifferentialOperator({{JetFunction::constant(1.0), 0}}); }

  const std::vector<DerivativeTerm>& terms() const { return terms_; }
  int max_order() const { return terms_.empty() ? 0 : terms_.back().order; }

  JetFunction apply(const JetFunction& f) const {
    auto terms = terms_;
    return JetFunction([terms, f](double x, int order) {
      const int top = terms.empty() ? 0 : terms.back().order;
      const Taylor fj = f.jet(x, order + top);
      Taylor sum(0.0, order);
      for (const auto& t : terms) sum += t.coeff.jet(x, order) * fj.differentiated(t.order).truncated(order);
      return sum;
    });
  }
  JetFunction operator()(const JetFunction& f) const { return apply(f); }

  friend DifferentialOperator operator+(const DifferentialOperator& a, const DifferentialOperator& b) {
    std::vector<DerivativeTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return DifferentialOperator(std::move(all));
  }
  friend DifferentialOperator operator*(double s, const DifferentialOperator& a) {
    std::vector<DerivativeTerm> out;
    for (const auto& t : a.terms_) out.push_back({s * t.coeff, t.order});
    return DifferentialOperator(std::move(out));
  }
  friend DifferentialOperator operator-(const DifferentialOperator& a) { return -1.0 * a; }
  friend DifferentialOperator operator-(const DifferentialOperator& a, const DifferentialOperator& b) {
    return a + (-b);
  }

  /// (A B) f = A (B f):  a_i D^i (b_j D^j) = sum_l C(i,l) a_i (D^l b_j) D^{i-l+j}.
  friend DifferentialOperator operator*(const DifferentialOperator& a, const DifferentialOperator& b) {
    std::vector<DerivativeTerm> out;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        double binom = 1.0;
        for (int l = 0; l <= ta.order; ++l) {
          if (l > 0) binom = binom * (ta.order - l + 1) / l;
          out.push_back({binom * (ta.coeff * tb.coeff.derivative(l)), ta.order - l + tb.order});
        }
      }
    }
    return DifferentialOperator(std::move(out));
  }

 private:
  static std::vector<DerivativeTerm> merge(std::vector<DerivativeTerm> terms) {
    std::stable_sort(terms.begin(), terms.end(),
                     [](const DerivativeTerm& x, const DerivativeTerm& y) { return x.order < y.order; });
    std::vector<DerivativeTerm> out;
    for (auto& t : terms) {
      if (!out.empty() && out.back().order == t.order) {
        out.back().coeff = out.back().coeff + t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const DerivativeTerm& t) {
      auto c = t.coeff.constant_value();
      return c && *c == 0.0;
    });
    return out;
  }

  std::vector<DerivativeTerm> terms_;
};

inline DifferentialOperator derivative_op(int k) { return DifferentialOperator({{JetFunction::constant(1.0), k}}); }
inline DifferentialOperator mul_op(const JetFunction& c) { return DifferentialOperator({{c, 0}}); }
inline DifferentialOperator mul_op(double c) { return mul_op(JetFunction::constant(c)); }
inline DifferentialOperator compose(const DifferentialOperator& a, const DifferentialOperator& b) { return a * b; }
inline DifferentialOperator commutator(const DifferentialOperator& a, const DifferentialOperator& b) {
  return a * b - b * a;
}

/// max over the grid of |lhs - rhs| / (1 + |rhs|).
inline double residual(const JetFunction& lhs, const JetFunction& rhs, const SampleGrid& grid) {
  double worst = 0.0;
  for (double x : grid) {
    const double l = lhs(x);
    const double r = rhs(x);
    const double res = std::abs(l - r) / (1.0 + std::abs(r));
    if (!std::isfinite(res)) throw EvaluationError("residual: non-finite value at " + std::to_string(x));
    worst = std::max(worst, res);
  }
  return worst;
}

inline double residual(const DifferentialOperator& a, const DifferentialOperator& b, const JetFunction& f,
                       const SampleGrid& grid) {
  return residual(a(f), b(f), grid);
}

}  // namespace fdosc
