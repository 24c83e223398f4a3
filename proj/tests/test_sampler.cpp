#include "medge/sampler.hpp"

#include <map>
#include <set>
#include <string>

#include "doctest.h"
#include "medge/asymptotics.hpp"
#include "medge/counting.hpp"
#include "medge/tree.hpp"

using namespace medge;

TEST_CASE("bounded draws are in range and reproducible") {
  Sampler a(123), b(123);
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.uniform_below(7);
    CHECK(x < 7);
    CHECK(x == b.uniform_below(7));
  }
  Sampler c(5);
  const BigInt bound("123456789012345678901234567890");
  for (int i = 0; i < 50; ++i) {
    const BigInt v = c.uniform_below_big(bound);
    CHECK(v >= 0);
    CHECK(v < bound);
  }
}

TEST_CASE("degenerate sizes are deterministic") {
  CHECK(sample_tree(0, 1) == MultiEdgeTree{});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(format_tree(sample_tree(1, seed)) == "(1:())");
  }
}

TEST_CASE("same seed, same tree") {
  for (long n : {4L, 8L}) {
    CHECK(sample_tree(n, 42) == sample_tree(n, 42));
  }
  Sampler a(9), b(9);
  for (int i = 0; i < 20; ++i) {
    CHECK(sample_tree(6, a) == sample_tree(6, b));
  }
}

TEST_CASE("sampled trees always have the requested size") {
  Sampler rng(31337);
  for (long n = 0; n <= 12; ++n) {
    for (int i = 0; i < 200; ++i) {
      CHECK(tree_size(sample_tree(n, rng)) == n);
    }
  }
}

TEST_CASE("compositions") {
  Sampler rng(77);
  CHECK(sample_composition(3, 1, rng) == std::vector<long>{3});
  CHECK(sample_composition(3, 3, rng) == std::vector<long>({1, 1, 1}));
  CHECK_THROWS_AS(sample_composition(3, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_composition(3, 4, rng), std::invalid_argument);

  // n=4 into 2 parts: each of (1,3), (2,2), (3,1) near 1/3
  std::map<std::string, int> freq;
  const int draws = 30000;
  for (int i = 0; i < draws; ++i) {
    const auto parts = sample_composition(4, 2, rng);
    CHECK(parts[0] + parts[1] == 4);
    freq[std::to_string(parts[0]) + "," + std::to_string(parts[1])] += 1;
  }
  CHECK(freq.size() == 3);
  for (const auto& [key, count] : freq) {
    CHECK(count == doctest::Approx(draws / 3.0).epsilon(0.05));
  }
}

TEST_CASE("uniform plane trees") {
  Sampler rng(2024);
  CHECK(sample_plane_tree(1, rng) == MultiEdgeTree{});

  SUBCASE("k=3: both shapes appear with equal frequency") {
    std::map<std::string, int> freq;
    const int draws = 40000;
    for (int i = 0; i < draws; ++i) {
      freq[format_tree(sample_plane_tree(3, rng))] += 1;
    }
    REQUIRE(freq.size() == 2);
    for (const auto& [shape, count] : freq) {
      // 1/2 +- 3 sigma, sigma = sqrt(draws)/2
      CHECK(std::abs(count - draws / 2.0) < 3.0 * std::sqrt(draws) / 2.0);
    }
  }

  SUBCASE("k=5: all 14 shapes, uniform by chi-square") {
    std::map<std::string, int> freq;
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) {
      const MultiEdgeTree t = sample_plane_tree(5, rng);
      CHECK(stats(t).vertices == 5);
      freq[format_tree(t)] += 1;
    }
    REQUIRE(freq.size() == 14);
    const double expected = draws / 14.0;
    double chi2 = 0.0;
    for (const auto& [shape, count] : freq) {
      chi2 += (count - expected) * (count - expected) / expected;
    }
    CHECK(chi_square_pvalue(chi2, 13) > 0.001);
  }
}

TEST_CASE("vertex-count marginal matches the exact distribution") {
  const long n = 8;
  const int draws = 20000;
  Sampler rng(555);
  std::map<long, long> freq;
  for (int i = 0; i < draws; ++i) {
    freq[stats(sample_tree(n, rng)).vertices] += 1;
  }
  const double total = mpz_get_d(a_n(n).get_mpz_t());
  double chi2 = 0.0;
  for (long k = 2; k <= n + 1; ++k) {
    const double expected =
        draws * mpz_get_d(count_vertices_eq(n, k).get_mpz_t()) / total;
    const double observed = static_cast<double>(freq[k]);
    chi2 += (observed - expected) * (observed - expected) / expected;
  }
  CHECK(chi_square_pvalue(chi2, static_cast<int>(n) - 1) > 0.001);
}
