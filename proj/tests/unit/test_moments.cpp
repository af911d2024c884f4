#include <doctest.h>

#include <cmath>
#include <random>

#include "gramlab/errors.hpp"
#include "gramlab/moments.hpp"
#include "support.hpp"

using namespace gramlab;

namespace {
constexpr double kEps = 9e-4;
}

TEST_SUITE("moments") {
  TEST_CASE("constants") {
    const auto c = make_moment_config(10000, 1000, 10, 1, kEps, true);
    CHECK(std::abs(std::log(c.A) - (21.0 - 1.5 * std::log(kEps))) < 1e-12);
    CHECK(std::abs(std::log(c.B) - (2 * std::log(c.A) - 8)) < 1e-12);
    CHECK(std::abs(c.L - std::log(std::log(10000.0))) < 1e-15);
    CHECK(std::abs(c.y - std::pow(c.x, 0.25)) < 1e-15);
    CHECK(kAlpha == doctest::Approx(27.0 / 82.0));
    CHECK_THROWS_AS(make_moment_config(10000, 1000, 10, 1, 1e-3, true), PreconditionError);
    CHECK_THROWS_AS(make_moment_config(10000, 1000, 10, 1, 0.0, true), PreconditionError);
    // prefix ranges fall back to lnln(N + M)
    CHECK(make_moment_config(0, 100, 1, 1, kEps, true).L == doctest::Approx(std::log(std::log(100.0))));
  }

  TEST_CASE("strict mode refuses desk-scale windows") {
    const auto& tab = testing::table();
    const auto cfg = make_moment_config(1000, 100, 10, 1, kEps, false);
    CHECK_THROWS_AS(block_difference_moment(tab, cfg), PreconditionError);
    CHECK_THROWS_AS(adjacent_difference_moment(tab, cfg), PreconditionError);
  }

  TEST_CASE("exploratory block and adjacent sums") {
    const auto& tab = testing::table();
    const auto cfg = make_moment_config(1000, 1000, 10, 1, kEps, true);
    const auto blk = block_difference_moment(tab, cfg);
    CHECK(blk.integer);
    CHECK_FALSE(blk.notes.empty());
    CHECK_FALSE(blk.has_main_term);  // ln(m eps / k) < 0
    std::int64_t direct = 0;
    for (std::int64_t n = 1001; n <= 2000; ++n) {
      const auto d = tab.s_at_gram(n + 10) - tab.s_at_gram(n);
      direct += d * d;
    }
    CHECK(blk.exact_sum == direct);

    const auto adj = adjacent_difference_moment(tab, cfg);
    CHECK(adj.has_bound);
    CHECK(adj.bound_satisfied);
    const auto first = first_moment(tab, 1000, 1000);
    // Cauchy: (sum |r|)^2 <= M sum r^2
    CHECK(first.exact_sum * first.exact_sum <= 1000 * adj.exact_sum);
    CHECK(first.main_term == 1000.0);
  }

  TEST_CASE("empty and crowded counts") {
    const auto& tab = testing::table();
    const auto c = empty_and_crowded_counts(tab, 120, 20);
    CHECK(c.empty >= 1);  // G_127
    CHECK(c.crowded >= 1);  // G_128
    CHECK(empty_and_crowded_counts(tab, 0, 126).empty == 0);
  }

  TEST_CASE("T_1 identity") {
    const auto& tab = testing::table();
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> pick(0, 3000);
    for (int i = 0; i < 60; ++i) {
      const std::int64_t N = pick(rng), M = 1 + pick(rng) % 1500;
      auto cfg = make_moment_config(N, M, 1, 1, kEps, true);
      const auto t1 = alternating_sum(tab, cfg);
      CAPTURE(N);
      CAPTURE(M);
      REQUIRE(2 * t1.exact_sum == alternating_sum_t1_identity(tab, N, M));
      REQUIRE(t1.bound_satisfied);
      cfg.k = 0;
      REQUIRE(alternating_sum(tab, cfg).exact_sum == tab.s_at_gram(N + M) - tab.s_at_gram(N));
    }
  }

  TEST_CASE("alternating bounds hold for orders 1..4") {
    const auto& tab = testing::table();
    for (int j = 1; j <= 4; ++j) {
      const auto r = alternating_sum(tab, make_moment_config(3000, 1000, 1, j, kEps, true));
      CAPTURE(j);
      CHECK(r.has_bound);
      CHECK(r.bound_satisfied);
    }
  }

  TEST_CASE("Selberg sums") {
    const auto& tab = testing::table();
    const auto zero = selberg_delta_moment(tab, 0, 126, 1, Parity::even, kEps, true);
    CHECK(zero.exact_sum == 0);
    const auto odd = selberg_delta_moment(tab, 1000, 1000, 1, Parity::odd, kEps, true);
    CHECK(odd.has_bound);
    CHECK(odd.bound_satisfied);
    const auto even = selberg_delta_moment(tab, 0, 4000, 1, Parity::even, kEps, true);
    CHECK(even.has_main_term);
    CHECK(even.ratio > 0.3);
    CHECK(even.ratio < 2.0);
  }

  TEST_CASE("Titchmarsh correlation") {
    const auto& tab = testing::table();
    const auto one = titchmarsh_correlation(tab, 1);
    CHECK(one.sum == doctest::Approx(tab.z_at_gram(0) * tab.z_at_gram(1)));
    const auto r = titchmarsh_correlation(tab, 5000);
    CHECK(r.sum < 0);
    CHECK(r.ratio > 0.8);
    CHECK(r.ratio < 1.2);
    CHECK_THROWS_AS(titchmarsh_correlation(tab, 0), PreconditionError);
  }

  TEST_CASE("ranges past the certified table are refused") {
    const auto& tab = testing::table();
    CHECK_THROWS_AS(first_moment(tab, tab.certified_gram(), 10), UncertifiedRange);
  }
}
