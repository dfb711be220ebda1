#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fdosc {

/// Truncated Taylor series sum_k c_k t^k, k = 0..order.
///
/// Arithmetic propagates derivatives exactly (up to roundoff), which is how
/// differential operators are applied without finite-difference error.
/// Coefficients are held in extended precision: high-order jets of x^p near
/// small x cancel heavily once several second-order operators are stacked.
class Taylor {
 public:
  using Real = long double;

  Taylor() : c_(1, 0.0L) {}
  Taylor(double value, int order) : Taylor(static_cast<Real>(value), order) {}
  Taylor(Real value, int order) : c_(static_cast<std::size_t>(order) + 1, 0.0L) { c_[0] = value; }

  /// The independent variable x0 + t.
  static Taylor variable(double x0, int order) {
    Taylor t(x0, order);
    if (order >= 1) t.c_[1] = 1.0L;
    return t;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  Real operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  Real& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  double value() const { return static_cast<double>(c_[0]); }

  /// k-th derivative at the expansion point.
  double derivative(int k) const {
    Real f = 1.0L;
    for (int i = 2; i <= k; ++i) f *= i;
    return static_cast<double>(c_[static_cast<std::size_t>(k)] * f);
  }

  /// Series of d^k/dx^k of this function, truncated to order() - k.
  Taylor differentiated(int k) const {
    if (k > order()) throw std::invalid_argument("Taylor::differentiated: order too low");
    Taylor out(0.0L, order() - k);
    for (int j = 0; j <= out.order(); ++j) {
      Real f = 1.0L;
      for (int i = j + 1; i <= j + k; ++i) f *= i;
      out[j] = c_[static_cast<std::size_t>(j + k)] * f;
    }
    return out;
  }

  Taylor truncated(int order) const {
    Taylor out(0.0L, order);
    for (int j = 0; j <= std::min(order, this->order()); ++j) out[j] = c_[static_cast<std::size_t>(j)];
    return out;
  }

  Taylor& operator+=(const Taylor& o) {
    resize_min(o);
    for (int j = 0; j <= order(); ++j) (*this)[j] += o[j];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    resize_min(o);
    for (int j = 0; j <= order(); ++j) (*this)[j] -= o[j];
    return *this;
  }
  Taylor& operator*=(Real s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Taylor& operator+=(Real s) {
    c_[0] += s;
    return *this;
  }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend Taylor operator-(Taylor a) { return a *= -1.0L; }
  friend Taylor operator+(Taylor a, double s) { return a += s; }
  friend Taylor operator+(double s, Taylor a) { return a += s; }
  friend Taylor operator-(Taylor a, double s) { return a += -static_cast<Real>(s); }
  friend Taylor operator-(double s, Taylor a) { return (a *= -1.0L) += s; }
  friend Taylor operator*(Taylor a, double s) { return a *= s; }
  friend Taylor operator*(double s, Taylor a) { return a *= s; }
  friend Taylor operator/(Taylor a, double s) { return a *= 1.0L / s; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    const int n = std::min(a.order(), b.order());
    Taylor out(0.0L, n);
    for (int k = 0; k <= n; ++k) {
      Real s = 0.0L;
      for (int j = 0; j <= k; ++j) s += a[j] * b[k - j];
      out[k] = s;
    }
    return out;
  }
  Taylor& operator*=(const Taylor& o) { return *this = *this * o; }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    const int n = std::min(a.order(), b.order());
    Taylor q(0.0L, n);
    for (int k = 0; k <= n; ++k) {
      Real s = a[k];
      for (int j = 1; j <= k; ++j) s -= b[j] * q[k - j];
      q[k] = s / b[0];
    }
    return q;
  }
  friend Taylor operator/(double s, const Taylor& b) { return Taylor(s, b.order()) / b; }

  friend Taylor exp(const Taylor& x) {
    Taylor y(std::exp(x[0]), x.order());
    for (int k = 1; k <= x.order(); ++k) {
      Real s = 0.0L;
      for (int j = 1; j <= k; ++j) s += j * x[j] * y[k - j];
      y[k] = s / k;
    }
    return y;
  }

  /// x^p for x[0] > 0.
  friend Taylor pow(const Taylor& x, double p) { return pow(x, static_cast<Real>(p)); }
  friend Taylor pow(const Taylor& x, Real p) {
    Taylor y(std::pow(x[0], p), x.order());
    for (int k = 1; k <= x.order(); ++k) {
      Real s = 0.0L;
      for (int j = 1; j <= k; ++j) s += (p * j - (k - j)) * x[j] * y[k - j];
      y[k] = s / (k * x[0]);
    }
    return y;
  }

  friend Taylor sqrt(const Taylor& x) { return pow(x, 0.5); }

 private:
  void resize_min(const Taylor& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
  }

  std::vector<Real> c_;
};

}  // namespace fdosc
