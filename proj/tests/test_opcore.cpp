#include <catch_amalgamated.hpp>

#include <cmath>

#include "fdosc/analytic_function.hpp"
#include "fdosc/difference_operator.hpp"
#include "fdosc/differential_operator.hpp"
#include "fdosc/harness/test_functions.hpp"
#include "fdosc/sample_grid.hpp"
#include "fdosc/taylor.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace fdosc;

namespace {

const SampleGrid& grid() {
  static const SampleGrid g = SampleGrid::default_grid();
  return g;
}

AnalyticFunction gaussian_wave() {
  return AnalyticFunction([](Complex z) { return std::exp(-0.3 * z * z + Complex(0.0, 0.7) * z); });
}

}  // namespace

TEST_CASE("default grid", "[opcore]") {
  const auto& g = grid();
  REQUIRE(g.size() == 32);
  REQUIRE(g.points().front() == 0.25);
  REQUIRE(g.points().back() == 8.0);
  REQUIRE_THAT(g.points()[1] / g.points()[0], WithinRel(g.points()[31] / g.points()[30], 1e-12));
  REQUIRE_THROWS_AS(SampleGrid({0.0, 1.0}, "has zero"), std::invalid_argument);
  REQUIRE_THROWS_AS(SampleGrid::log_spaced(-1.0, 2.0, 4), std::invalid_argument);
}

TEST_CASE("shift operators act exactly", "[opcore]") {
  const auto f = gaussian_wave();
  for (Complex a : {Complex(0.0, 1.0), Complex(0.0, -0.5), Complex(0.3, 0.2)}) {
    const auto g = shift_op(a)(f);
    for (double x : grid()) REQUIRE(std::abs(g(x) - f(Complex(x) + a)) <= 1e-14 * (1.0 + std::abs(g(x))));
  }
}

TEST_CASE("shift composition adds shifts", "[opcore]") {
  const auto f = gaussian_wave();
  const auto lhs = shift_op(Complex(0.0, 0.5)) * shift_op(Complex(0.0, 0.5));
  CHECK(residual(lhs, shift_op(Complex(0.0, 1.0)), f, grid()) <= 1e-14);
  // e^{i d} e^{-i d} collapses to the identity term
  const auto id = shift_op(Complex(0.0, 1.0)) * shift_op(Complex(0.0, -1.0));
  REQUIRE(id.terms().size() == 1);
  CHECK(residual(id, DifferenceOperator::identity(), f, grid()) == 0.0);
}

TEST_CASE("multiplication and shift do not commute", "[opcore]") {
  const auto x = mul_op(AnalyticFunction::identity());
  const auto t = shift_op(Complex(0.0, 1.0));
  // [e^{i d}, rho] = i e^{i d}
  const auto lhs = commutator(t, x);
  const auto rhs = Complex(0.0, 1.0) * t;
  for (const auto& f : harness::random_analytic_functions(3, 5)) CHECK(residual(lhs, rhs, f, grid()) <= 1e-13);
}

TEST_CASE("commutators are antisymmetric", "[opcore]") {
  const auto a = mul_op(AnalyticFunction::identity()) * shift_op(Complex(0.0, 0.5));
  const auto b = shift_op(Complex(0.0, -1.0)) + mul_op(Complex(2.0));
  for (const auto& f : harness::random_analytic_functions(11, 5)) {
    CHECK(residual(commutator(a, b), -commutator(b, a), f, grid()) <= 1e-13);
  }
}

TEST_CASE("power and adjoint", "[opcore]") {
  const auto t = shift_op(Complex(0.0, 0.25));
  const auto f = gaussian_wave();
  CHECK(residual(power(t, 4), shift_op(Complex(0.0, 1.0)), f, grid()) <= 1e-14);
  // (rho e^{i d})^+ = e^{i d} rho on the real line
  const auto op = mul_op(AnalyticFunction::identity()) * shift_op(Complex(0.0, 1.0));
  const auto adj = shift_op(Complex(0.0, 1.0)) * mul_op(AnalyticFunction::identity());
  CHECK(residual(op.adjoint(), adj, f, grid()) <= 1e-14);
}

TEST_CASE("Taylor arithmetic", "[opcore]") {
  const auto x = Taylor::variable(0.7, 6);
  const auto e = exp(x);
  for (int k = 0; k <= 6; ++k) REQUIRE_THAT(e.derivative(k), WithinRel(std::exp(0.7), 1e-15));
  const auto p = pow(x, 2.5);
  REQUIRE_THAT(p.derivative(2), WithinRel(2.5 * 1.5 * std::pow(0.7, 0.5), 1e-15));
  const auto q = Taylor(1.0, 6) / x;
  REQUIRE_THAT(q.derivative(3), WithinRel(-6.0 / std::pow(0.7, 4), 1e-14));
  REQUIRE_THROWS_AS(x.differentiated(7), std::invalid_argument);
}

TEST_CASE("differential operators apply exactly", "[opcore]") {
  const auto f = JetFunction::from_expression([](const auto& x) { return exp(-0.5 * (x * x)) * x; });
  const auto d2 = derivative_op(2)(f);
  for (double x : grid()) {
    const double want = (x * x * x - 3.0 * x) * std::exp(-0.5 * x * x);
    REQUIRE_THAT(d2(x), WithinAbs(want, 1e-14));
  }
  // Leibniz composition: d (x d) = d + x d^2
  const auto xop = mul_op(JetFunction::from_expression([](const auto& x) { return x; }));
  const auto lhs = derivative_op(1) * (xop * derivative_op(1));
  const auto rhs = derivative_op(1) + xop * derivative_op(2);
  CHECK(residual(lhs, rhs, f, grid()) <= 1e-14);
}

TEST_CASE("exact derivatives agree with central differences", "[opcore][fd]") {
  for (const auto& f : harness::random_smooth_functions(5, 6)) {
    const auto d2 = derivative_op(2)(f);
    for (double x : grid()) {
      const double h = 1e-3;
      const double fd = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
      REQUIRE_THAT(d2(x), WithinAbs(fd, 1e-4 * (1.0 + std::abs(fd))));
    }
  }
}

TEST_CASE("residual is relative to the right-hand side", "[opcore]") {
  const SampleGrid g({1.0}, "one point");
  const auto a = AnalyticFunction::constant(3.0);
  const auto b = AnalyticFunction::constant(1.0);
  REQUIRE(residual(a, b, g) == 1.0);
  const auto singular = AnalyticFunction([](Complex z) -> Complex {
    if (z == Complex(1.0)) throw EvaluationError("boom");
    return z;
  });
  REQUIRE_THROWS_AS(residual(singular, b, g), EvaluationError);
}
