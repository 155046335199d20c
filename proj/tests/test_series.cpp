#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <vector>

#include "support.hpp"
#include "zalcman/series.hpp"

using namespace zalcman;

namespace {

CoefficientSeries koebe(int N) {
  std::vector<double> a(N);
  for (int n = 1; n <= N; ++n) a[n - 1] = n;
  return CoefficientSeries::from_real(a);
}

}  // namespace

TEST_CASE("functional on Koebe, identity and f0") {
  CHECK(eval_functional(koebe(4), FunctionalQuery(2, 3, 1.0)) == 2.0);
  for (double lambda : {-3.0, 0.0, 1.0, 7.5})
    CHECK(eval_functional(CoefficientSeries::identity(10), FunctionalQuery(3, 4, lambda)) == 0.0);

  std::vector<double> f0(5, 0.0);
  f0[0] = 1.0;
  for (int n = 2; n <= 5; ++n) f0[n - 1] = 2.0 / n;
  CHECK(eval_functional(CoefficientSeries::from_real(f0), FunctionalQuery(2, 2, 2.0)) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("functional reports the order it needs") {
  try {
    eval_functional(koebe(4), FunctionalQuery(3, 3, 1.0));
    FAIL("expected LengthError");
  } catch (const LengthError& e) {
    CHECK(e.required_order() == 5);
  }
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(FunctionalQuery(1, 2, 1.0), ParameterError);
  CHECK_THROWS_AS(FunctionalQuery(2, 0, 1.0), ParameterError);
  CHECK_THROWS_AS(CoefficientSeries::from_real(std::vector<double>{1.0}), LengthError);
  CHECK_THROWS_AS(CoefficientSeries::from_real(std::vector<double>{2.0, 1.0}), ParameterError);

  ComplexVector<double> c(2);
  c << std::complex<double>(1.0, 0.0), std::complex<double>(0.0, 1e-20);
  CHECK_THROWS_AS(CaratheodorySeries(c, true), ParameterError);
  CHECK_NOTHROW(CaratheodorySeries(c, false));
  CHECK_THROWS_AS(CaratheodorySeries{c}(3), LengthError);
  CHECK(koebe(3)(0) == std::complex<double>(0.0));
}

TEST_CASE("rotation") {
  const auto k = koebe(12);
  const auto same = rotate(k, 0.0);
  CHECK(same.coeffs() == k.coeffs());

  const auto flipped = rotate(k, std::numbers::pi);
  for (int n = 1; n <= 12; ++n) {
    const double expected = n * (n % 2 == 1 ? 1.0 : -1.0);
    CHECK(std::abs(flipped(n) - expected) <= 1e-12 * n);
  }
  CHECK(flipped(1) == std::complex<double>(1.0));
}

TEST_CASE("property: rotation leaves the functional unchanged") {
  testing::Gen g(20260101);
  for (int trial = 0; trial < 500; ++trial) {
    const auto f = g.series(13);
    const FunctionalQuery q(g.integer(2, 7), g.integer(2, 7), g.uniform(-4.0, 6.0));
    const double before = eval_functional(f, q);
    const double after = eval_functional(rotate(f, g.angle()), q);
    CHECK(std::fabs(after - before) <= 1e-12 * std::max(1.0, before));
  }
}

TEST_CASE("Alexander transform") {
  const auto ones = alexander(koebe(9));
  for (int n = 1; n <= 9; ++n) CHECK(ones(n) == std::complex<double>(1.0));
  CHECK(alexander(CoefficientSeries::identity(6)).coeffs() == CoefficientSeries::identity(6).coeffs());

  testing::Gen g(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = g.series(20);
    CHECK((alexander(derivative_transform(f)).coeffs() - f.coeffs()).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("binomial series") {
  const auto two = binomial_series(2.0, 8);
  const auto zero = binomial_series(0.0, 8);
  const auto one = binomial_series(1.0, 8);
  for (int k = 0; k <= 8; ++k) {
    CHECK(two(k) == k + 1.0);
    CHECK(zero(k) == (k == 0 ? 1.0 : 0.0));
    CHECK(one(k) == 1.0);
  }
  CHECK_THROWS_AS(binomial_series(1.0, 0), ParameterError);
}

TEST_CASE("property: (1-z)^{-a}(1-z)^{-b} = (1-z)^{-(a+b)}") {
  testing::Gen g(99);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = g.uniform(-2.0, 2.5), b = g.uniform(-2.0, 2.5);
    const int N = g.integer(1, 64);
    const auto lhs = cauchy_product(binomial_series(a, N), binomial_series(b, N), N + 1);
    const auto rhs = binomial_series(a + b, N);
    for (int k = 0; k <= N; ++k) CHECK(std::fabs(lhs(k) - rhs(k)) <= 1e-12 * std::max(1.0, std::fabs(rhs(k))));
  }
}

TEST_CASE("scalar type is a template parameter") {
  std::vector<long double> a{1.0L, 2.0L, 3.0L, 4.0L};
  const auto f = BasicCoefficientSeries<long double>::from_real(a);
  CHECK(eval_functional(f, FunctionalQuery(2, 3, 1.0)) == 2.0L);
  CHECK(std::abs(rotate(f, 0.5L)(2) - std::polar(2.0L, 0.5L)) < 1e-18L);
}
