#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "rhg/bounds.hpp"

using namespace rhg;

TEST_CASE("two-sided concentration bound evaluates its closed form") {
  CHECK(chernoff_two_sided(100, 0.5, 0.2) ==
        doctest::Approx(2 * std::exp(-2.0 / 3)).epsilon(1e-12));
  // small eps pushes the bound toward the vacuous value 2
  CHECK(chernoff_two_sided(100, 0.5, 1e-9) == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)chernoff_two_sided(0, 0.5, 0.2), std::invalid_argument);
  CHECK_THROWS_AS((void)chernoff_two_sided(10, 0.0, 0.2),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)chernoff_two_sided(10, 0.5, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)chernoff_two_sided(10, 0.5, 1.5),
                  std::invalid_argument);
}

TEST_CASE("overshoot bound evaluates its closed form") {
  CHECK(chernoff_overshoot(50, 0.1, 4) ==
        doctest::Approx(std::pow(std::exp(1.0) / 4, 20)).epsilon(1e-12));
  CHECK(chernoff_overshoot(50, 0.1, 4) == doctest::Approx(4.44e-4).epsilon(1e-2));
  // alpha = e collapses the base to 1
  CHECK(chernoff_overshoot(123, 0.37, std::exp(1.0)) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)chernoff_overshoot(10, 0.5, 1.0),
                  std::invalid_argument);
}

TEST_CASE("exact binomial tails agree with hand counts") {
  // Bin(2, 0.5): P(X >= 1) = 3/4, P(X >= 2) = 1/4
  CHECK(static_cast<double>(binomial_upper_tail(2, 0.5L, 1)) ==
        doctest::Approx(0.75).epsilon(1e-12));
  CHECK(static_cast<double>(binomial_upper_tail(2, 0.5L, 2)) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(static_cast<double>(binomial_upper_tail(2, 0.5L, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  // fractional thresholds round up to the next achievable count
  CHECK(static_cast<double>(binomial_upper_tail(2, 0.5L, 0.5L)) ==
        doctest::Approx(0.75).epsilon(1e-12));
  // Bin(3, 1/3): P(|X - 1| >= 1) = P(0) + P(2) + P(3) = 8/27 + 6/27 + 1/27
  CHECK(static_cast<double>(binomial_two_sided_tail(3, 1.0L / 3, 1.0L)) ==
        doctest::Approx(15.0 / 27).epsilon(1e-12));
}

TEST_CASE("the two-sided bound dominates the exact binomial tail") {
  CHECK(static_cast<double>(binomial_two_sided_tail(100, 0.5L, 0.2L)) <=
        chernoff_two_sided(100, 0.5, 0.2));
}

TEST_CASE("the overshoot bound dominates the exact upper tail") {
  CHECK(static_cast<double>(binomial_upper_tail(50, 0.1L, 20)) <=
        chernoff_overshoot(50, 0.1, 4));
}

TEST_CASE("both concentration bounds dominate exact tails on a grid") {
  for (std::uint64_t n : {20ull, 50ull, 100ull}) {
    for (double p : {0.05, 0.1, 0.2, 0.3, 0.4, 0.5}) {
      for (double eps : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        long double exact = binomial_two_sided_tail(n, p, eps);
        double bound = chernoff_two_sided(static_cast<double>(n), p, eps);
        CHECK(static_cast<double>(exact) <= bound + 1e-15);
      }
      for (double alpha : {1.5, 2.0, 3.0, 4.0}) {
        long double exact =
            binomial_upper_tail(n, p, alpha * static_cast<double>(n) * p);
        double bound = chernoff_overshoot(static_cast<double>(n), p, alpha);
        CHECK(static_cast<double>(exact) <= bound + 1e-15);
      }
    }
  }
}

TEST_CASE("hypergeometric pmf matches direct combinatorial ratios") {
  // draw 4 from 10 with 5 marked: P(X = 4) = C(5,4)C(5,0)/C(10,4) = 5/210
  CHECK(static_cast<double>(hypergeometric_pmf(10, 5, 4, 4)) ==
        doctest::Approx(5.0 / 210).epsilon(1e-12));
  CHECK(static_cast<double>(hypergeometric_upper_tail(10, 5, 4, 4)) ==
        doctest::Approx(5.0 / 210).epsilon(1e-12));
  CHECK(static_cast<double>(hypergeometric_pmf(10, 5, 4, 2)) ==
        doctest::Approx(100.0 / 210).epsilon(1e-12));
  // impossible counts carry zero mass
  CHECK(static_cast<double>(hypergeometric_pmf(10, 5, 4, 5)) == 0.0);
  CHECK(static_cast<double>(hypergeometric_pmf(10, 2, 4, 3)) == 0.0);
}

TEST_CASE("drawing nothing concentrates all mass at zero") {
  CHECK(static_cast<double>(hypergeometric_upper_tail(10, 5, 0, 1)) == 0.0);
  CHECK(static_cast<double>(hypergeometric_pmf(10, 5, 0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hypergeometric mass sums to one and the mean identity holds") {
  for (std::uint64_t M : {10, 25, 60}) {
    for (std::uint64_t K : {std::uint64_t{0}, std::uint64_t{3}, M / 2, M}) {
      for (std::uint64_t n : {std::uint64_t{0}, std::uint64_t{1}, M / 3, M}) {
        CHECK(std::fabs(static_cast<double>(
                  hypergeometric_total_mass(M, K, n) - 1.0L)) < 1e-10);
        long double mean = 0;
        for (std::uint64_t k = 0; k <= n; ++k)
          mean += static_cast<long double>(k) * hypergeometric_pmf(M, K, n, k);
        long double expected = static_cast<long double>(n) *
                               static_cast<long double>(K) /
                               static_cast<long double>(M);
        CHECK(std::fabs(static_cast<double>(mean - expected)) < 1e-10);
      }
    }
  }
  CHECK_THROWS_AS((void)hypergeometric_pmf(10, 11, 4, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)hypergeometric_pmf(10, 5, 11, 2),
                  std::invalid_argument);
}

TEST_CASE("hypergeometric tails obey the binomial-style bounds") {
  // sampling without replacement concentrates at least as well
  const std::uint64_t M = 100, K = 30, n = 40;
  const long double p = static_cast<long double>(K) / M;
  for (double eps : {0.2, 0.5, 0.8}) {
    const double mu = static_cast<double>(n) * static_cast<double>(p);
    long double tail_hi = hypergeometric_upper_tail(
        M, K, n, static_cast<std::uint64_t>(std::ceil(mu * (1 + eps))));
    long double tail_lo = hypergeometric_lower_tail(
        M, K, n, static_cast<std::uint64_t>(std::floor(mu * (1 - eps))));
    double bound =
        chernoff_two_sided(static_cast<double>(n), static_cast<double>(p), eps);
    CHECK(static_cast<double>(tail_hi + tail_lo) <= bound + 1e-15);
  }
}

TEST_CASE("codegree union bound evaluates its closed form") {
  // parameters arranged so the base is exactly 1: bound = n^2
  CHECK(codegree_union_bound(100, 3, 10000, 9) ==
        doctest::Approx(1e4).epsilon(1e-12));
  CHECK(codegree_union_bound(10, 3, 100, 2) ==
        doctest::Approx(100 * std::pow(9.0 * 100 / 200, 2)).epsilon(1e-12));
  CHECK_THROWS_AS((void)codegree_union_bound(0, 3, 10, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)codegree_union_bound(10, 3, 10, 0),
                  std::invalid_argument);
}

TEST_CASE("low-degree exponent matches its closed form") {
  // eps=0.1, alpha=1.05: 0.01(ln 100 + 1 + ln 1.05) - 1.05
  double theta = low_degree_exponent(0.1, 1.05);
  CHECK(theta == doctest::Approx(0.01 * (std::log(100.0) + 1 + std::log(1.05)) -
                                 1.05)
                     .epsilon(1e-12));
  CHECK(theta == doctest::Approx(-0.99346).epsilon(1e-4));
  CHECK_FALSE(low_degree_exponent_ok(0.1, 1.05));  // just above -1

  double theta2 = low_degree_exponent(0.1, 1.5);
  CHECK(theta2 == doctest::Approx(-1.43989).epsilon(1e-4));
  CHECK(low_degree_exponent_ok(0.1, 1.5));

  // alpha = 1 with tiny eps approaches the boundary value -1 from above
  CHECK(low_degree_exponent(1e-6, 1.0) == doctest::Approx(-1.0).epsilon(1e-6));

  CHECK_THROWS_AS((void)low_degree_exponent(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS((void)low_degree_exponent(0.1, 0.0), std::invalid_argument);
}

TEST_CASE("degree threshold roots are frozen against an independent solve") {
  // reference roots computed by a standalone bisection before this
  // implementation existed
  DegreeThreshold r3 = degree_threshold(3);
  CHECK(r3.value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(r3.residual <= 1e-12);
  CHECK(r3.min_degree == 4);

  DegreeThreshold r4 = degree_threshold(4);
  CHECK(r4.value == doctest::Approx(5.500754168813223).epsilon(1e-9));
  CHECK(r4.residual <= 1e-12);
  CHECK(r4.min_degree == 6);

  DegreeThreshold r5 = degree_threshold(5);
  CHECK(r5.value == doctest::Approx(11.997801393348400).epsilon(1e-9));
  CHECK(r5.residual <= 1e-12);
  CHECK(r5.min_degree == 12);

  for (std::uint32_t r : {3u, 4u, 5u, 6u, 7u}) {
    DegreeThreshold t = degree_threshold(r);
    CHECK(t.value > 2.0);
    CHECK(std::isfinite(t.value));
    CHECK(t.residual <= 1e-12);
  }
  CHECK_THROWS_AS((void)degree_threshold(2), std::invalid_argument);
}

TEST_CASE("both threshold equation forms coincide when d equals rho") {
  for (std::uint32_t r : {3u, 4u, 5u}) {
    for (double rho : {2.5, 3.0, 4.75, 8.0}) {
      double sub = degree_threshold_equation(rho, r);
      double orig =
          degree_threshold_equation(rho, r, ThresholdForm::original, rho);
      CHECK(sub == doctest::Approx(orig).epsilon(1e-12));
    }
  }
  // the original form with a different d moves the value
  CHECK(degree_threshold_equation(4.0, 3, ThresholdForm::original, 3.0) !=
        doctest::Approx(degree_threshold_equation(4.0, 3)));
}

TEST_CASE("the threshold equation brackets its root") {
  for (std::uint32_t r : {3u, 4u, 5u}) {
    DegreeThreshold t = degree_threshold(r);
    double lo = degree_threshold_equation(t.value - 0.01, r);
    double hi = degree_threshold_equation(t.value + 0.01, r);
    CHECK(lo * hi < 0);  // sign change straddles the root
  }
}
