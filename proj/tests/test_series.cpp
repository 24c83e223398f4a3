#include "medge/series.hpp"

#include <random>

#include "doctest.h"

using namespace medge;

namespace {

TruncatedSeries from_ints(int order, std::initializer_list<long> values) {
  std::vector<BigInt> coeffs;
  for (long v : values) coeffs.emplace_back(v);
  return TruncatedSeries(order, std::move(coeffs));
}

TruncatedSeries random_series(int order, std::mt19937_64& rng,
                              bool unit_constant) {
  std::vector<BigInt> coeffs;
  for (int i = 0; i <= order; ++i) {
    coeffs.emplace_back(static_cast<long>(rng() % 21) - 10);
  }
  if (unit_constant) coeffs[0] = (rng() & 1) ? 1 : -1;
  return TruncatedSeries(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("additive arithmetic") {
  auto one_plus_z = from_ints(4, {1, 1});
  auto one_minus_z = from_ints(4, {1, -1});
  CHECK(one_plus_z + one_minus_z == from_ints(4, {2}));
  CHECK(one_plus_z - one_plus_z == TruncatedSeries(4));
  CHECK(from_ints(2, {1, 1, 1}).scalar_mul(3) == from_ints(2, {3, 3, 3}));
}

TEST_CASE("order mismatch is rejected") {
  CHECK_THROWS_AS(from_ints(3, {1}) + from_ints(4, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_ints(3, {1}) * from_ints(2, {1}),
                  std::invalid_argument);
}

TEST_CASE("cauchy product") {
  auto p = from_ints(4, {1, 3, 1});
  CHECK(p * p == from_ints(4, {1, 6, 11, 6, 1}));
  auto any = from_ints(4, {2, -1, 4, 0, 7});
  CHECK(any * TruncatedSeries::constant(4, 1) == any);
  // truncation: z * z at order 1 vanishes
  auto z = TruncatedSeries::monomial(1, 1, 1);
  CHECK(z * z == TruncatedSeries(1));
}

TEST_CASE("reciprocal of 1 - z is the geometric series") {
  auto geo = from_ints(6, {1, -1}).reciprocal();
  for (int i = 0; i <= 6; ++i) CHECK(geo.coeff(i) == 1);
  CHECK(TruncatedSeries::constant(5, 1).reciprocal() ==
        TruncatedSeries::constant(5, 1));
}

TEST_CASE("reciprocal of 1 - z - z^2 gives Fibonacci numbers") {
  auto fib = from_ints(9, {1, -1, -1}).reciprocal();
  const long expected[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  for (int i = 0; i <= 9; ++i) CHECK(fib.coeff(i) == expected[i]);
}

TEST_CASE("reciprocal requires a unit constant term") {
  CHECK_THROWS_AS(from_ints(3, {2, 1}).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(TruncatedSeries(3).reciprocal(), std::domain_error);
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 8);
    auto a = random_series(order, rng, false);
    auto b = random_series(order, rng, false);
    auto c = random_series(order, rng, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("series times its reciprocal is one") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 10);
    auto a = random_series(order, rng, true);
    CHECK(a * a.reciprocal() == TruncatedSeries::constant(order, 1));
  }
}

TEST_CASE("shift multiplies by a power of z") {
  auto s = from_ints(3, {1, 2, 3, 4});
  CHECK(s.shift(1) == from_ints(3, {0, 1, 2, 3}));
  CHECK(s.shift(4) == TruncatedSeries(3));
}
