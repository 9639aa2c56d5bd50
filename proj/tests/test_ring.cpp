#include <random>

#include "askzeta/rational.hpp"
#include "askzeta/ring.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace askzeta;

TEST_CASE("truncated ring arithmetic") {
  TruncatedRing r(3, 2);
  CHECK(r.modulus() == 9);
  CHECK(r.reduce(-1) == 8);
  CHECK(r.reduce(BigInt(-10)) == 8);
  CHECK(r.valuation(0) == 2);
  CHECK(r.valuation(3) == 1);
  CHECK(r.valuation(4) == 0);
  CHECK(r.mul(r.inverse(4), 4) == 1);
  CHECK_THROWS_AS((void)r.inverse(6), std::domain_error);
  CHECK(r.is_unit(2));
  CHECK_FALSE(r.is_unit(6));
}

TEST_CASE("ring construction rejects bad parameters") {
  CHECK_THROWS_AS(TruncatedRing(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedRing(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedRing(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedRing(2, 40), std::invalid_argument);
  CHECK_NOTHROW(TruncatedRing(2, 0));
}

TEST_CASE("level zero is the zero ring") {
  TruncatedRing r(5, 0);
  CHECK(r.modulus() == 1);
  RingMatrix a(2, 3);
  CHECK(kernel_size(a, r) == 1);
}

TEST_CASE("smith exponents of a diagonal matrix") {
  TruncatedRing r(2, 3);
  RingMatrix a(3, 3);
  a.at(0, 0) = 4;
  a.at(1, 1) = 1;
  a.at(2, 2) = 0;
  CHECK(smith_exponents(a, r) == std::vector<int>{0, 2, 3});
  CHECK(kernel_exponent(a, r) == 5);
  CHECK(unit_rank(a, r) == 1);
}

TEST_CASE("kernel of a wide or tall zero matrix") {
  TruncatedRing r(3, 2);
  CHECK(kernel_size(RingMatrix(2, 5), r) == 81);
  CHECK(kernel_size(RingMatrix(3, 1), r) == 729);
  RingMatrix tall(3, 1);
  tall.at(0, 0) = 1;
  CHECK(kernel_size(tall, r) == 81);
}

TEST_CASE("kernel sizes agree with literal enumeration") {
  std::mt19937_64 rng(20240611);
  for (auto [p, n] : {std::pair{2, 1}, {2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    TruncatedRing ring(p, n);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = rng() % 4, cols = rng() % 4;
      auto m = testing_support::random_matrix(rng, rows, cols, ring.modulus());
      if (trial % 3 == 0)  // bias towards non-units
        for (auto& x : m) x = ring.mul(x, p);
      RingMatrix a(rows, cols);
      a.data = m;
      const auto expected = oracle::kernel_count(m, rows, cols, ring);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(kernel_size(a, ring) == expected);
      // |Ker| * |Im| = |R^rows|
      CHECK(kernel_size(a, ring) * image_size(a, ring) ==
            big_pow(BigInt(ring.modulus()), static_cast<unsigned>(rows)));
    }
  }
}

TEST_CASE("unit rank equals rank over the residue field") {
  std::mt19937_64 rng(77);
  TruncatedRing f(3, 1);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
    auto m = testing_support::random_matrix(rng, rows, cols, 3);
    RingMatrix a(rows, cols);
    a.data = m;
    CHECK(unit_rank(a, f) == oracle::span_rank(m, rows, cols, 3));
  }
}

TEST_CASE("matrix product and transpose") {
  TruncatedRing r(5, 1);
  RingMatrix a = reduce_mod(IntMatrix(2, 2, {1, 2, 3, 4}), r);
  RingMatrix b = reduce_mod(IntMatrix(2, 2, {0, 1, 1, 0}), r);
  auto c = multiply(a, b, r);
  CHECK(c.data == std::vector<std::int64_t>{2, 1, 4, 3});
  CHECK(a.transposed().data == std::vector<std::int64_t>{1, 3, 2, 4});
  CHECK(reduce_mod(IntMatrix(1, 1, {-7}), r).at(0, 0) == 3);
}

TEST_CASE("fractions round trip") {
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(-6, 4)) == "-3/2");
  CHECK(parse_fraction(" 10/4 ") == Rational(5, 2));
  CHECK(parse_fraction("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("x"), std::invalid_argument);
  CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
  CHECK(big_pow(BigInt(3), 40) == BigInt("12157665459056928801"));
}
