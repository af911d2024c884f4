#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "gramlab/errors.hpp"
#include "gramlab/numeric.hpp"
#include "gramlab/theta.hpp"

using namespace gramlab;

// reference values: mpmath siegeltheta / diff at 30 digits (tests/oracles/make_oracles.py)

TEST_SUITE("theta_gram") {
  TEST_CASE("theta matches mpmath") {
    struct Ref {
      double t, theta;
    };
    const Ref refs[] = {{10, -3.067074396289895291702014},
                        {50, 26.46136607016140964745495},
                        {100, 87.97216523178721962548313},
                        {1000, 2034.546428038031608703345},
                        {10000, 31861.92383083582087295034},
                        {100000, 433752.0272291707814356446},
                        {1000000, 5488816.353078403444882823}};
    for (const auto& r : refs) {
      CAPTURE(r.t);
      const auto e = theta(r.t);
      CHECK(std::abs(e.value - r.theta) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(r.theta) + 1e-14);
      CHECK(std::abs(static_cast<double>(theta_extended(r.t)) - r.theta) <= 1e-9 * std::max(1.0, std::abs(r.theta)));
    }
    CHECK(std::abs(theta(20 * kPi).value - 40.52955008425581397937893) < 1e-13);
  }

  TEST_CASE("derivatives") {
    CHECK(std::abs(theta_derivative(100, 1) - 1.383644476419579353241) < 1e-14);
    CHECK(std::abs(theta_derivative(100, 2) - 0.005000041668125115343921) < 1e-15);
    const double t = 2 * kPi * std::exp(1.0);
    CHECK(std::abs(theta_derivative(t, 1) - 0.4999285386862773582233) < 1e-13);
    CHECK(std::abs(theta_derivative(t, 2) - 0.02928328889328033019286) < 1e-13);
    CHECK_THROWS_AS(theta_derivative(100, 3), PreconditionError);
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(theta(6.9), DomainError);
    CHECK_THROWS_AS(theta_derivative(5, 1), DomainError);
    CHECK_NOTHROW(theta(7.0));
  }

  TEST_CASE("loggamma branch agrees with the series") {
    for (double t : {7.5, 10.0, 50.0, 300.0, 5000.0}) {
      CAPTURE(t);
      CHECK(std::abs(theta_loggamma(t) - theta(t).value) < 1e-10 * std::max(1.0, std::abs(theta(t).value)));
    }
    // negative near t = 2 pi e / ... the loggamma branch also covers small heights
    CHECK(theta_loggamma(1.0) < 0);
  }

  TEST_CASE("gram points") {
    struct Ref {
      std::int64_t n;
      double t;
    };
    const Ref refs[] = {{0, 9.666908056130192141262},    {1, 17.84559954041086081683},
                        {2, 23.170282701246309279},      {3, 27.67018221781633796094},
                        {126, 280.8024293797203998906},  {127, 282.4547208234621746108},
                        {128, 284.104476350307736651},   {134, 293.951193353226304358},
                        {135, 295.5839069742281760926},  {136, 297.2142820835078115763},
                        {1041, 1467.477465941183781007}, {1042, 1468.629537414511220502}};
    for (const auto& r : refs) {
      CAPTURE(r.n);
      CHECK(std::abs(gram_point(r.n).t - r.t) <= 1e-13 + 2e-15 * r.t);
    }
    CHECK_THROWS_AS(gram_point(-1), PreconditionError);
  }

  TEST_CASE("quoted four-decimal Gram points round correctly") {
    const double quoted[] = {9.6669, 17.8456, 23.1703, 27.6702};
    for (int n = 0; n < 4; ++n) CHECK(std::abs(gram_point(n).t - quoted[n]) <= 5e-5);
  }

  TEST_CASE("property: residual and monotonicity") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> pick(0, 2'000'000);
    for (int i = 0; i < 300; ++i) {
      const std::int64_t n = pick(rng);
      CAPTURE(n);
      const auto g = gram_point(n);
      CHECK(std::abs(gram_residual(g)) < 1e-12 * std::max<double>(1, static_cast<double>(n)));
      CHECK(gram_point(n + 1).t > g.t);
      CHECK(g.t > kThetaFloor);
    }
    double prev = 0;
    for (std::int64_t n = 0; n < 3000; ++n) {
      const double t = gram_point(n).t;
      REQUIRE(t > prev);
      prev = t;
    }
  }

  TEST_CASE("property: derivative consistency") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(std::log(10.0), std::log(1e6));
    const double h = 1e-4;
    for (int i = 0; i < 200; ++i) {
      const double t = std::exp(u(rng));
      CAPTURE(t);
      // offsets formed in long double: t + h rounded to binary64 alone moves the quotient by ~4e-6 near 1e6
      const long double tl = t;
      const double fd = static_cast<double>((theta_extended(tl + h) - theta_extended(tl - h)) / (2 * h));
      CHECK(std::abs(theta_derivative(t, 1) - fd) < 1e-6);
    }
  }

  TEST_CASE("gram_index_below") {
    CHECK(gram_index_below(1468) == 1041);
    CHECK(gram_index_below(gram_point(500).t) == 500);
    CHECK(gram_index_below(std::nextafter(gram_point(500).t, 0.0)) == 499);
    CHECK(gram_index_below(10) == 0);
  }

  TEST_CASE("spacing report") {
    CHECK(gram_spacing_report(1000, 100, 0) == 0.0);
    CHECK_THROWS_AS(gram_spacing_report(50, 10, 1), PreconditionError);
    CHECK_THROWS_AS(gram_spacing_report(1000, 10, 11), PreconditionError);
    CHECK(std::abs(gram_spacing_bound(1000, 100) - 300.0 / (1000 * std::pow(std::log(1000.0), 2))) < 1e-15);
    CHECK(gram_spacing_report(1000, 100, 1) <= kPi * gram_spacing_bound(1000, 100));
    CHECK(gram_spacing_report(10000, 1000, 5) <= 5 * kPi * gram_spacing_bound(10000, 1000));
  }

  // The stated error term 3M/(N ln^2 N) omits the factor pi m carried by the
  // mean-value step, and fails on every sample; kept as a known failure.
  TEST_CASE("stated spacing bound at sampled (N, M, m)" * doctest::should_fail()) {
    for (const auto& [N, M, m] : {std::tuple{1000, 100, 1}, std::tuple{10000, 1000, 5}, std::tuple{100000, 1000, 1}}) {
      CAPTURE(N);
      CHECK(gram_spacing_report(N, M, m) <= gram_spacing_bound(N, M));
    }
  }
}
