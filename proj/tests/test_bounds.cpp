#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "zalcman/bounds.hpp"

using namespace zalcman;

TEST_CASE("weights A") {
  CHECK(coeff_A(1, 0.3) == 1.0);
  CHECK(coeff_A(2, 0.0) == 2.0);
  for (int n = 1; n <= 64; ++n) {
    CHECK(coeff_A(n, 0.0) == n);
    CHECK(coeff_A(n, 0.5) == 1.0);
  }
  // independent Gamma-function evaluation of the product
  for (int n = 2; n <= 64; ++n) {
    const double alpha = -0.5;
    const double A = std::exp(std::lgamma(n + 1.0 - 2.0 * alpha) - std::lgamma(2.0 - 2.0 * alpha) - std::lgamma(n));
    CHECK(coeff_A(n, alpha) == doctest::Approx(A).epsilon(1e-12));
  }
  CHECK_THROWS_AS(coeff_A(3, 1.0), ParameterError);
  CHECK_THROWS_AS(coeff_A(0, 0.0), ParameterError);
}

TEST_CASE("weights B and C") {
  CHECK(coeff_B(1, -4.0) == 1.0);
  CHECK(coeff_B(2, 0.0) == 1.5);
  CHECK(coeff_B(3, 0.0) == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  for (int n = 1; n <= 30; ++n) CHECK(coeff_B(n, 0.5) == 1.0);

  for (double beta : {0.0, 0.5, -1.0, 0.9}) {
    CHECK(coeff_C(1, beta) == 1.0);
    for (int n = 2; n <= 20; n += 2) CHECK(coeff_C(n, beta) == 1.0 - beta);
  }
  for (int n = 1; n <= 21; n += 2) CHECK(coeff_C(n, 0.0) == 1.0);
  CHECK(coeff_C(3, 0.5) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_THROWS_AS(coeff_B(2, 1.0), ParameterError);
  CHECK_THROWS_AS(coeff_C(2, 2.0), ParameterError);
}

TEST_CASE("weight tables are memoized and consistent") {
  const auto a = weight_table(WeightKind::A, 0.125, 10);
  const auto b = weight_table(WeightKind::A, 0.125, 40);
  const auto c = weight_table(WeightKind::A, 0.125, 10);
  CHECK(a.values == c.values);
  for (int n = 1; n <= 10; ++n) CHECK(a(n) == b(n));
  CHECK(a.size() == 10);
  CHECK(b.size() == 40);
}

TEST_CASE("class parameters") {
  CHECK_THROWS_AS(bound(ClassSpec{ClassId::starlike_hull, std::nullopt, std::nullopt}, FunctionalQuery(2, 2, 1)),
                  ParameterError);
  CHECK_THROWS_AS(bound(ClassSpec{ClassId::R, 0.0, 0.0}, FunctionalQuery(2, 2, 1)), ParameterError);
  CHECK_THROWS_AS(bound(ClassSpec{ClassId::typically_real, std::nullopt, 0.0}, FunctionalQuery(2, 2, 1)),
                  ParameterError);
  CHECK_THROWS_AS(bound(ClassSpec::F1(1.0), FunctionalQuery(2, 2, 5)), ParameterError);
  CHECK_THROWS_AS(bound(ClassSpec::convex_hull(1.5), FunctionalQuery(2, 2, 5)), ParameterError);
}

TEST_CASE("bound examples") {
  auto b = bound(ClassSpec::starlike_hull(0.0), FunctionalQuery(2, 2, 1.0));
  CHECK(*b.value == 3.0);
  CHECK(b.branch == Branch::first);

  b = bound(ClassSpec::R(0.0), FunctionalQuery(2, 2, 2.0));
  CHECK(*b.value == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(b.branch == Branch::second);
  CHECK(b.sharpness == Sharpness::sharp);
  CHECK(b.attaining_extremal->id == ExtremalId::f0_R);

  b = bound(ClassSpec::typically_real(), FunctionalQuery(2, 2, 2.0));
  CHECK(*b.value == 5.0);
  CHECK(b.branch == Branch::case_i_b);

  b = bound(ClassSpec::typically_real(), FunctionalQuery(3, 3, 1.0));
  CHECK(*b.value == 4.0);
  CHECK(b.branch == Branch::case_iii);

  b = bound(ClassSpec::F1(0.0), FunctionalQuery(2, 2, 4.0 / 3.0));
  CHECK(*b.value == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(b.branch == Branch::single);
  // mu (2n-1)^2/n^2 + (3-4n)/(2n-1) at n = 2
  CHECK(*b.value == doctest::Approx(4.0 / 3.0 * 9.0 / 4.0 + (3.0 - 8.0) / 3.0).epsilon(1e-15));
}

TEST_CASE("typically real cases (ii) mirror (i)") {
  for (int even = 2; even <= 10; even += 2) {
    for (double lambda : {1.0, 1.25, 1.5, 2.0, 4.0}) {
      const auto i = bound(ClassSpec::typically_real(), FunctionalQuery(2, even, lambda));
      const auto ii = bound(ClassSpec::typically_real(), FunctionalQuery(even, 2, lambda));
      CHECK(*i.value == *ii.value);
      if (even > 2 || lambda > 1.5) {
        CHECK(i.branch == (lambda <= 1.5 ? Branch::case_i_a : Branch::case_i_b));
      }
    }
  }
  CHECK(bound(ClassSpec::typically_real(), FunctionalQuery(4, 2, 1.2)).branch == Branch::case_ii_a);
  CHECK(bound(ClassSpec::typically_real(), FunctionalQuery(4, 2, 1.7)).branch == Branch::case_ii_b);
  CHECK(bound(ClassSpec::typically_real(), FunctionalQuery(2, 3, 1.2)).branch == Branch::case_iii);
}

TEST_CASE("thresholds") {
  CHECK(branch_thresholds(ClassSpec::starlike_hull(0.0), 2, 2) == std::vector<double>{0.0, 1.5});
  CHECK(branch_thresholds(ClassSpec::R(0.0), 2, 3) == std::vector<double>{0.0, 1.5});
  const auto f1 = branch_thresholds(ClassSpec::F1(0.0), 2, 2);
  REQUIRE(f1.size() == 1);
  CHECK(f1[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(branch_thresholds(ClassSpec::typically_real(), 2, 4) == std::vector<double>{1.0, 1.5});
  CHECK(branch_thresholds(ClassSpec::typically_real(), 3, 4) == std::vector<double>{1.0});
  CHECK(branch_thresholds(ClassSpec::f_over_z(0.5), 3, 3) == std::vector<double>{0.0, 2.0});
  // negative beta: the max picks the beta-free term
  CHECK(branch_thresholds(ClassSpec::F2(-1.0), 3, 3)[0] == doctest::Approx(9.0 / 5.0).epsilon(1e-15));
  CHECK_THROWS_AS(branch_thresholds(ClassSpec::F2(0.0), 2, 4), OutsideDomainError);
}

TEST_CASE("outside the theorem domains") {
  auto check_out = [](const ClassSpec& s, int n, int m, double lambda, DomainCode code) {
    const auto b = bound(s, FunctionalQuery(n, m, lambda));
    CHECK_FALSE(b.valid());
    CHECK_FALSE(b.value.has_value());
    CHECK(b.code == code);
    CHECK_FALSE(b.attaining_extremal.has_value());
  };
  check_out(ClassSpec::typically_real(), 2, 2, 0.999, DomainCode::lambda_below_one);
  check_out(ClassSpec::S_real(), 4, 3, -1.0, DomainCode::lambda_below_one);
  check_out(ClassSpec::F1(0.0), 2, 2, 1.3, DomainCode::below_mu_threshold);
  check_out(ClassSpec::F2(0.5), 3, 2, 2.3, DomainCode::below_mu_threshold);  // 6/(4 * 0.5) = 3
  check_out(ClassSpec::F2(0.0), 2, 4, 3.0, DomainCode::both_even_unsupported);
  CHECK(bound(ClassSpec::F2(0.5), FunctionalQuery(3, 2, 3.0)).valid());
}

TEST_CASE("lambda at a threshold takes the first branch") {
  const auto at = bound(ClassSpec::starlike_hull(0.0), FunctionalQuery(2, 2, 1.5));
  CHECK(at.branch == Branch::first);
  CHECK(bound(ClassSpec::R(0.0), FunctionalQuery(2, 2, 0.0)).branch == Branch::first);
  CHECK(bound(ClassSpec::typically_real(), FunctionalQuery(2, 4, 1.5)).branch == Branch::case_i_a);
}

TEST_CASE("property: adjacent branches agree at every interior threshold") {
  std::vector<ClassSpec> specs = {ClassSpec::starlike_hull(0.0), ClassSpec::starlike_hull(0.5),
                                  ClassSpec::starlike_hull(-0.5), ClassSpec::convex_hull(0.0),
                                  ClassSpec::convex_hull(0.75),  ClassSpec::R(0.0),
                                  ClassSpec::R(-1.0),            ClassSpec::f_over_z(0.5),
                                  ClassSpec::typically_real()};
  int checked = 0;
  for (const auto& spec : specs) {
    for (int n = 2; n <= 8; ++n) {
      for (int m = 2; m <= 8; ++m) {
        const auto t = branch_thresholds(spec, n, m);
        for (double x : t) {
          const FunctionalQuery q(n, m, x);
          const auto left = bound(spec, FunctionalQuery(n, m, x - 1e-7));
          const auto right = bound(spec, FunctionalQuery(n, m, x + 1e-7));
          if (!left.valid()) continue;
          const double lv = *branch_value(spec, q, left.branch), rv = *branch_value(spec, q, right.branch);
          CHECK(std::fabs(lv - rv) <= 1e-12);
          CHECK(*bound(spec, q).value == lv);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("property: starlike bound grows linearly for negative lambda") {
  testing::Gen g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const double alpha = g.uniform(-1.0, 0.95), lambda = g.uniform(-10.0, 0.0);
    const int n = g.integer(2, 9), m = g.integer(2, 9);
    const double expected = coeff_A(n + m - 1, alpha) + std::fabs(lambda) * coeff_A(n, alpha) * coeff_A(m, alpha);
    const double b = *bound(ClassSpec::starlike_hull(alpha), FunctionalQuery(n, m, lambda)).value;
    CHECK(b == doctest::Approx(expected).epsilon(1e-14));
    CHECK(b >= coeff_A(n + m - 1, alpha));
  }
}

TEST_CASE("property: convex bound is the starlike formula with A_k/k") {
  testing::Gen g(6);
  for (int trial = 0; trial < 300; ++trial) {
    const double alpha = g.uniform(-1.0, 0.95), lambda = g.uniform(-5.0, 10.0);
    const int n = g.integer(2, 9), m = g.integer(2, 9), k = n + m - 1;
    const double P = coeff_A(n, alpha) / n * coeff_A(m, alpha) / m, Q = coeff_A(k, alpha) / k;
    const double expected = (lambda >= 0 && lambda <= 2 * Q / P) ? Q : std::fabs(lambda * P - Q);
    CHECK(std::fabs(*bound(ClassSpec::convex_hull(alpha), FunctionalQuery(n, m, lambda)).value - expected) <= 1e-12);
  }
}

TEST_CASE("typically real at lambda = 1") {
  for (int n = 2; n <= 12; ++n) {
    for (int m = 2; m <= 12; ++m) {
      const auto b = bound(ClassSpec::typically_real(), FunctionalQuery(n, m, 1.0));
      if (b.branch == Branch::case_iii) {
        CHECK(*b.value == (n - 1.0) * (m - 1.0));
      } else {
        const int other = n == 2 && m % 2 == 0 ? m : n;
        CHECK(*b.value == 3.0 + (other - 2.0));
      }
    }
  }
}

TEST_CASE("sharpness bookkeeping") {
  testing::Gen g(8);
  const ClassSpec specs[] = {ClassSpec::starlike_hull(0.2), ClassSpec::convex_hull(-0.3), ClassSpec::R(0.1),
                             ClassSpec::f_over_z(0.4),      ClassSpec::typically_real(),    ClassSpec::S_real(),
                             ClassSpec::F1(0.3),            ClassSpec::F2(0.6)};
  for (const auto& spec : specs) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto b = bound(spec, FunctionalQuery(g.integer(2, 7), g.integer(2, 7), g.uniform(-3.0, 8.0)));
      if (!b.valid()) continue;
      CHECK(*b.value >= 0.0);
      CHECK(b.attaining_extremal.has_value() == b.claimed_sharp());
    }
  }
  CHECK(bound(ClassSpec::starlike_hull(0.0), FunctionalQuery(2, 3, 1.0)).sharpness == Sharpness::not_claimed);
  CHECK(bound(ClassSpec::starlike_hull(0.0), FunctionalQuery(3, 3, 1.0)).sharpness == Sharpness::sharp_conditional);
  CHECK(bound(ClassSpec::typically_real(), FunctionalQuery(2, 4, 1.2)).sharpness == Sharpness::not_claimed);
  CHECK(bound(ClassSpec::typically_real(), FunctionalQuery(2, 2, 1.2)).sharpness == Sharpness::sharp_conditional);
}
