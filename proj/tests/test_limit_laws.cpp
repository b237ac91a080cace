#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sojourn/errors.hpp"
#include "sojourn/limit_laws.hpp"
#include "support/quadrature.hpp"

using namespace sojourn;
using namespace sojourn::limits;
using sojourn::testing::adaptive_simpson;
using sojourn::testing::quadrature_cdf;

namespace {

constexpr Law kLaws[] = {Law::Arcsine, Law::MpPositive, Law::MpNegative};

}  // namespace

TEST_CASE("cdf examples") {
  CHECK(DistributionSpec(Law::Arcsine).cdf(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(DistributionSpec(Law::MpPositive).cdf(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  // Oracle value: quadrature of (2/pi) sqrt(x/(1-x)) on [0, 1/2].
  const double oracle = quadrature_cdf(Law::MpPositive, 0.5);
  CHECK(oracle == doctest::Approx(0.5 - 1.0 / std::numbers::pi).epsilon(1e-10));
  CHECK(std::abs(DistributionSpec(Law::MpPositive).cdf(0.5) - 0.181690113816209) < 1e-12);
  for (Law law : kLaws) {
    const DistributionSpec spec(law);
    CHECK(spec.cdf(0.0) == 0.0);
    CHECK(spec.cdf(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(spec.cdf(-0.01), ArgumentError);
    CHECK_THROWS_AS(spec.cdf(1.01), ArgumentError);
    CHECK_THROWS_AS(spec.cdf(std::nan("")), ArgumentError);
  }
}

TEST_CASE("density examples and domain") {
  const double two_over_pi = 2.0 / std::numbers::pi;
  for (Law law : kLaws) {
    const DistributionSpec spec(law);
    CHECK(spec.density(0.5) == doctest::Approx(two_over_pi).epsilon(1e-15));
    CHECK_THROWS_AS(spec.density(0.0), ArgumentError);
    CHECK_THROWS_AS(spec.density(1.0), ArgumentError);
  }
}

TEST_CASE("density integrates to the cdf away from the endpoints") {
  for (Law law : kLaws) {
    const DistributionSpec spec(law);
    for (double a = 0.05; a < 0.9; a += 0.1) {
      const double b = a + 0.09;
      const double integral = adaptive_simpson([&](double x) { return spec.density(x); }, a, b, 1e-12);
      CHECK(std::abs(integral - (spec.cdf(b) - spec.cdf(a))) < 1e-10);
    }
  }
}

TEST_CASE("closed forms match quadrature (coarse grid)") {
  for (Law law : kLaws) {
    const DistributionSpec spec(law);
    for (int i = 0; i <= 50; ++i) {
      const double r = i / 50.0;
      REQUIRE(std::abs(spec.cdf(r) - quadrature_cdf(law, r)) <= 1e-8);
    }
  }
}

TEST_CASE("mixture identity and monotonicity") {
  const DistributionSpec arcsine(Law::Arcsine);
  const DistributionSpec pos(Law::MpPositive);
  const DistributionSpec neg(Law::MpNegative);
  double prev[3] = {0, 0, 0};
  for (int i = 0; i <= 10000; ++i) {
    const double r = i / 10000.0;
    REQUIRE(std::abs(0.5 * pos.cdf(r) + 0.5 * neg.cdf(r) - arcsine.cdf(r)) <= 1e-12);
    int j = 0;
    for (Law law : kLaws) {
      const double v = DistributionSpec(law).cdf(r);
      REQUIRE(v >= prev[j]);
      prev[j++] = v;
    }
  }
}

TEST_CASE("law names") {
  CHECK(parse_law("arcsine") == Law::Arcsine);
  CHECK(parse_law("mp-positive") == Law::MpPositive);
  CHECK(parse_law("mp-negative") == Law::MpNegative);
  CHECK(to_string(Law::MpNegative) == "mp-negative");
  CHECK_THROWS_AS(parse_law("normal"), ArgumentError);
  CHECK(matching_law(PathClass::All) == Law::Arcsine);
  CHECK(matching_law(PathClass::PositiveEnd) == Law::MpPositive);
  CHECK_FALSE(matching_law(PathClass::Bridge).has_value());
}

TEST_CASE("finite_n_cdf") {
  const auto bridge = finite_n_cdf(2, PathClass::Bridge);
  CHECK(bridge.support == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(bridge.cumulative[0] == doctest::Approx(1.0 / 3));
  CHECK(bridge.cumulative[1] == doctest::Approx(2.0 / 3));
  CHECK(bridge.cumulative[2] == 1.0);

  const auto all = finite_n_cdf(1, PathClass::All);
  CHECK(all.support == std::vector<double>{0.0, 1.0});
  CHECK(all.cumulative == std::vector<double>{0.5, 1.0});

  const auto exact = finite_n_cdf_exact(2, PathClass::PositiveEnd);
  CHECK(exact == std::vector<ExactProbability>{{0, 1}, {1, 4}, {1, 1}});

  CHECK(all(-0.1) == 0.0);
  CHECK(all(0.0) == 0.5);
  CHECK(all(0.99) == 0.5);
  CHECK(all(1.0) == 1.0);
  CHECK_THROWS_AS(finite_n_cdf(0, PathClass::All), ArgumentError);
}

TEST_CASE("ks_distance on hand-built step functions") {
  SUBCASE("single jump of 1 at r = 1") {
    StepCdf degenerate{{1.0}, {1.0}, std::nullopt};
    // Just below 1, F is 0 and G is essentially 1.
    CHECK(ks_distance(degenerate, DistributionSpec(Law::MpPositive)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("single jump at 1/2 against arcsine") {
    StepCdf half{{0.5}, {1.0}, std::nullopt};
    CHECK(ks_distance(half, DistributionSpec(Law::Arcsine)) == doctest::Approx(0.5));
  }
  SUBCASE("atom at 0 against mp-negative") {
    StepCdf zero{{0.0}, {1.0}, std::nullopt};
    CHECK(ks_distance(zero, DistributionSpec(Law::MpNegative)) == doctest::Approx(1.0));
  }
  SUBCASE("matches a dense brute-force sup") {
    const auto f = finite_n_cdf(7, PathClass::PositiveEnd);
    const DistributionSpec spec(Law::MpPositive);
    double brute = 0.0;
    for (int i = 0; i <= 700000; ++i) {
      const double r = i / 700000.0;
      brute = std::max(brute, std::abs(f(r) - spec.cdf(r)));
      if (i > 0) {
        // left limit approached from below
        const double below = std::nextafter(r, 0.0);
        brute = std::max(brute, std::abs(f(below) - spec.cdf(below)));
      }
    }
    CHECK(ks_distance(f, spec) == doctest::Approx(brute).epsilon(1e-6));
  }
}

TEST_CASE("empirical_cdf") {
  const std::vector<std::uint64_t> counts{1, 0, 3};
  const auto f = empirical_cdf(counts);
  CHECK(f.support == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(f.cumulative == std::vector<double>{0.25, 0.25, 1.0});
  const std::vector<std::uint64_t> empty{0, 0, 0};
  CHECK_THROWS_AS(empirical_cdf(empty), DegenerateOutputError);
  const std::vector<std::uint64_t> too_short{5};
  CHECK_THROWS_AS(empirical_cdf(too_short), ArgumentError);
}

TEST_CASE("finite-n KS distance shrinks with n") {
  for (PathClass c : {PathClass::All, PathClass::PositiveEnd}) {
    const DistributionSpec spec(*matching_law(c));
    const double d10 = ks_distance(finite_n_cdf(10, c), spec);
    const double d100 = ks_distance(finite_n_cdf(100, c), spec);
    CHECK(d100 <= d10);
    MESSAGE(to_string(c), ": KS n=10 ", d10, ", n=100 ", d100);
  }
}
