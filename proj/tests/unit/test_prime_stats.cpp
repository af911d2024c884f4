#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <random>

#include "gramlab/errors.hpp"
#include "gramlab/prime_stats.hpp"
#include "support.hpp"

using namespace gramlab;
namespace fs = std::filesystem;

TEST_SUITE("prime_stats") {
  TEST_CASE("sieve") {
    const auto p = sieve_primes(100);
    CHECK(p.primes.size() == 25);
    CHECK(p.primes.back() == 97);
    CHECK(sieve_primes(1).primes.empty());
    CHECK(sieve_primes(1'000'000).primes.size() == 78498);
    CHECK_THROWS_AS(sieve_primes(1000, 100), ResourceError);
  }

  TEST_CASE("cache file round trip and failure modes") {
    const fs::path dir = fs::temp_directory_path() / "gramlab_prime_cache_test";
    fs::create_directories(dir);
    const auto path = dir / "p.bin";
    const auto tab = sieve_primes(10000);
    write_prime_cache(path, tab);
    const auto back = read_prime_cache(path);
    CHECK(back.limit == tab.limit);
    CHECK(back.primes == tab.primes);
    {
      std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
      f.seekp(8);
      f.put(2);
    }
    CHECK_THROWS_AS(read_prime_cache(path), VersionMismatch);
    {
      std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
      f.put('X');
    }
    CHECK_THROWS_AS(read_prime_cache(path), ParseError);
    fs::remove_all(dir);
  }

  TEST_CASE("Mertens sums") {
    const auto s10 = mertens_sums(10);
    CHECK(std::abs(s10.sum_recip_p - 1.17619047619047619047619) < 1e-15);
    CHECK(s10.sum_logp_over_p < std::log(10.0));
    CHECK(kMertensConstant == doctest::Approx(0.261497212847642783755426838609).epsilon(1e-16));
    const double x = 1e6;
    const auto s = mertens_sums(1'000'000);
    const double d = s.sum_recip_p - std::log(std::log(x)) - kMertensConstant;
    const double l2 = std::log(x) * std::log(x);
    CHECK(d > -0.5 / l2);
    CHECK(d < 1 / l2);
    CHECK_THROWS_AS(mertens_sums(1), PreconditionError);
  }

  TEST_CASE("V_y") {
    CHECK(std::abs(v_y(100, 1e4) - (-0.06808572127222944867075713)) < 1e-12);
    CHECK(v_y(100, 2) == 0.0);
    // metamorphic: extending y adds exactly the new primes
    const double t = 1234.5;
    double extra = 0;
    for (const auto p : sieve_primes(3000).primes) {
      if (p >= 1000) extra += std::sin(t * std::log(static_cast<double>(p))) / std::sqrt(static_cast<double>(p));
    }
    CHECK(std::abs(v_y(t, 1000) + extra / 3.141592653589793 - v_y(t, 3000)) < 1e-12);
  }

  TEST_CASE("V(x; h)") {
    const auto v = v_xh(1e6, 0.2);
    CHECK(std::abs(v.main_term - 0.50817700102095524076) < 1e-14);
    CHECK(v.deviation <= 1.05);
    CHECK_THROWS_AS(v_xh(std::exp(10.0), 0.2), PreconditionError);  // h ln x = 2
    CHECK_THROWS_AS(v_xh(1e8, 0.4), PreconditionError);
    CHECK_THROWS_AS(v_xh(1e8, 0.0), PreconditionError);
  }

  TEST_CASE("diagonal identity") {
    const auto one = [](std::uint64_t) { return std::complex<double>(1, 0); };
    const auto k1 = diagonal_identity_check(1, 10, one);
    CHECK(k1.holds);
    CHECK(std::abs(k1.left - 1.17619047619047619) < 1e-14);
    const auto k2 = diagonal_identity_check(2, 50, one);
    CHECK(k2.holds);
    CHECK(k2.theta == doctest::Approx(-0.125));
    // random coefficients |a(p)| <= 1, fixed seed
    std::mt19937_64 rng(20240917);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<std::complex<double>> coef(1001);
      for (auto& c : coef) {
        do c = {u(rng), u(rng)};
        while (std::abs(c) > 1);
      }
      const auto a = [&](std::uint64_t p) { return coef[p]; };
      CHECK(diagonal_identity_check(1, 1000, a).holds);
      CHECK(diagonal_identity_check(2, 300, a).holds);
    }
    CHECK_THROWS_AS(diagonal_identity_check(2, 10, one), PreconditionError);
    CHECK_THROWS_AS(diagonal_identity_check(3, 100, one), PreconditionError);
    CHECK_THROWS_AS(diagonal_identity_check(2, 2000, one), ResourceError);
  }

  TEST_CASE("residual moments") {
    const auto& tab = testing::table();
    const auto cfg = make_moment_config(3000, 1000, 1, 1, 9e-4, true);
    const auto r = residual_moments(tab, cfg);
    CHECK(r.has_bound);
    CHECK(r.bound_satisfied);
    CHECK_FALSE(r.notes.empty());
  }
}
