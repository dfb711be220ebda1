#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "fdosc/errors.hpp"
#include "fdosc/specfun.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using fdosc::Complex;
using fdosc::kI;

namespace {

// Reference values from mpmath at 40 digits.
void require_close(Complex got, Complex want, double rel) {
  INFO("got " << got << ", want " << want);
  REQUIRE(std::abs(got - want) <= rel * std::abs(want));
}

// (a)_k computed directly, for the explicit hypergeometric sum.
Complex rising(Complex a, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= a + static_cast<double>(i);
  return r;
}

Complex cdhahn_by_sum(int n, double x, double a, double b, double c) {
  Complex sum = 0.0;
  double fact = 1.0;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    sum += rising(-n, k) * rising(a + kI * x, k) * rising(a - kI * x, k) / (rising(a + b, k) * rising(a + c, k) * fact);
  }
  return rising(a + b, n) * rising(a + c, n) * sum;
}

double laguerre_by_sum(int n, double d, double y) {
  double sum = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double binom = std::exp(std::lgamma(n + d + 1.0) - std::lgamma(n - k + 1.0) - std::lgamma(d + k + 1.0));
    sum += ((k % 2) ? -1.0 : 1.0) * binom * std::pow(y, k) / std::tgamma(k + 1.0);
  }
  return sum;
}

}  // namespace

TEST_CASE("gamma matches reference values", "[specfun]") {
  require_close(fdosc::gamma({0.3, 1.7}), {0.071091832537680395, -0.13937742326232288}, 1e-13);
  require_close(fdosc::gamma({-2.5, 0.5}), {-0.33387520352243234, -0.20645730796360841}, 1e-13);
  require_close(fdosc::gamma({4.2, 0.0}), {7.7566895357931776, 0.0}, 1e-14);
}

TEST_CASE("log_gamma matches the principal branch", "[specfun]") {
  require_close(fdosc::log_gamma({5.0, 10.0}), {-4.2855074435882004, 19.117070897478212}, 1e-13);
  const Complex z{-3.3, 0.2};
  const Complex lg = fdosc::log_gamma(z);
  REQUIRE_THAT(lg.real(), WithinAbs(-1.080555944299959, 1e-12));
  // imaginary part agrees modulo 2 pi
  const double k = std::round((lg.imag() + 11.914238004764486) / (2.0 * std::numbers::pi));
  REQUIRE_THAT(lg.imag() - 2.0 * std::numbers::pi * k, WithinAbs(-11.914238004764486, 1e-11));
}

TEST_CASE("gamma recurrence and reflection over random points", "[specfun]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-6.0, 6.0);
  std::uniform_real_distribution<double> im(-4.0, 4.0);
  double worst_rec = 0.0;
  double worst_refl = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Complex z{re(rng), im(rng)};
    const Complex g = fdosc::gamma(z);
    worst_rec = std::max(worst_rec, std::abs(fdosc::gamma(z + 1.0) - z * g) / std::abs(z * g));
    const Complex lhs = g * fdosc::gamma(1.0 - z);
    const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
    worst_refl = std::max(worst_refl, std::abs(lhs - rhs) / std::abs(rhs));
  }
  CHECK(worst_rec <= 1e-11);
  CHECK(worst_refl <= 1e-11);
}

TEST_CASE("gamma poles raise PoleError", "[specfun][errors]") {
  REQUIRE_THROWS_AS(fdosc::gamma({-2.0, 0.0}), fdosc::PoleError);
  REQUIRE_THROWS_AS(fdosc::log_gamma({0.0, 0.0}), fdosc::PoleError);
  REQUIRE_THROWS_AS(fdosc::gamma({0.0, 0.0}), fdosc::EvaluationError);
}

TEST_CASE("generalized degree", "[specfun]") {
  require_close(fdosc::generalized_degree(0.7, 1.3), {0.6718886911828529, 0.16190745096936869}, 1e-13);
  require_close(fdosc::generalized_degree(2.1, 0.5), {1.4465155888282324, -0.087090971850473061}, 1e-13);
  require_close(fdosc::generalized_degree(1.5, 3.0), {0.375, 6.75}, 1e-15);
  SECTION("raising the degree multiplies by rho + i lambda") {
    for (double lam : {0.3, 1.0, 1.7, 2.5}) {
      for (double rho : {0.4, 1.1, 3.0}) {
        const Complex lhs = fdosc::generalized_degree(rho, lam + 1.0);
        const Complex rhs = fdosc::generalized_degree(rho, lam) * (rho + kI * lam);
        REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      }
    }
  }
  SECTION("integer degree equals the finite product") {
    const Complex rho{0.8, 0.0};
    REQUIRE(std::abs(fdosc::generalized_degree(rho, 2.0) - rho * (rho + kI)) < 1e-15);
  }
}

TEST_CASE("associated Laguerre polynomials", "[specfun]") {
  REQUIRE_THAT(fdosc::laguerre(5, 0.67, 2.3), WithinRel(0.81215907038083333, 1e-13));
  REQUIRE_THAT(fdosc::laguerre(8, 1.5, 10.0), WithinRel(-24.59288339766245, 1e-12));
  for (int n = 0; n <= 10; ++n) {
    for (double y : {0.1, 1.0, 4.5}) {
      REQUIRE_THAT(fdosc::laguerre(n, 0.8, y), WithinAbs(laguerre_by_sum(n, 0.8, y), 1e-10));
    }
  }
  REQUIRE_THROWS_AS(fdosc::laguerre(-1, 0.5, 1.0), std::invalid_argument);
}

TEST_CASE("continuous dual Hahn polynomials", "[specfun]") {
  require_close(fdosc::cdhahn(3, Complex(0.8), 1.2, 2.5, 0.5), {610.543781, 0.0}, 1e-13);
  require_close(fdosc::cdhahn(6, Complex(1.7), 1.1790770339219021, 2.5096901208892459, 0.5),
                {-16464015.712161548, 0.0}, 1e-12);

  SECTION("recurrence agrees with the terminating sum") {
    for (int n = 0; n <= 8; ++n) {
      for (double x : {0.3, 1.2, 2.9}) {
        const Complex want = cdhahn_by_sum(n, x, 1.3, 2.2, 0.5);
        require_close(fdosc::cdhahn(n, Complex(x), 1.3, 2.2, 0.5), want, 1e-11);
      }
    }
  }
  SECTION("symmetric in the last two parameters") {
    double worst = 0.0;
    for (int n = 0; n <= 8; ++n) {
      for (double x : {0.25, 0.9, 2.0, 5.5}) {
        const Complex p = fdosc::cdhahn(n, Complex(x), 1.1, 2.6, 0.5);
        const Complex q = fdosc::cdhahn(n, Complex(x), 1.1, 0.5, 2.6);
        worst = std::max(worst, std::abs(p - q) / (1.0 + std::abs(p)));
      }
    }
    CHECK(worst <= 1e-12);
  }
  SECTION("degenerate parameters are rejected") {
    REQUIRE_THROWS_AS(fdosc::cdhahn(2, Complex(1.0), -1.0, 1.0, 0.5), fdosc::ParameterError);
  }
}

TEST_CASE("pochhammer", "[specfun]") {
  REQUIRE(fdosc::pochhammer(2.5, 0) == 1.0);
  REQUIRE_THAT(fdosc::pochhammer(2.5, 3), WithinRel(2.5 * 3.5 * 4.5, 1e-15));
  REQUIRE_THROWS_AS(fdosc::pochhammer(1.0, -1), std::invalid_argument);
}
