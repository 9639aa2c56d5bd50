#include <random>

#include "askzeta/ask.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace askzeta;

TEST_CASE("first moment agrees with the literal average on random tensors") {
  std::mt19937_64 rng(2024);
  const std::pair<int, int> rings[] = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}};
  for (int trial = 0; trial < 40; ++trial) {
    Shape s{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
    auto rep = testing_support::random_rep(rng, s);
    for (auto [p, n] : rings) {
      TruncatedRing ring(p, n);
      if (std::pow(ring.modulus(), s.l + s.d) > 2e5) continue;
      const Rational expected = oracle::ask(rep, ring);
      CAPTURE(p);
      CAPTURE(n);
      for (auto st : {Strategy::direct, Strategy::circ, Strategy::bullet, Strategy::automatic})
        CHECK(ask_m(rep, ring, 1, st).value == expected);
    }
  }
}

TEST_CASE("higher moments agree with the literal average") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    Shape s{1 + rng() % 2, 1 + rng() % 3, 1 + rng() % 3};
    auto rep = testing_support::random_rep(rng, s);
    TruncatedRing ring(3, 1);
    for (unsigned m : {2u, 3u}) CHECK(ask_m(rep, ring, m).value == oracle::ask(rep, ring, m));
  }
}

TEST_CASE("census matches the enumeration histogram") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 15; ++trial) {
    Shape s{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
    auto rep = testing_support::random_rep(rng, s);
    TruncatedRing ring(2, 2);
    auto census = kernel_census(rep, ring);
    auto expected = oracle::census(rep, ring);
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const auto it = census.histogram.find(static_cast<int>(k));
      CHECK((it == census.histogram.end() ? 0 : it->second) == expected[k]);
    }
  }
}

TEST_CASE("threaded enumeration is deterministic") {
  std::mt19937_64 rng(8);
  auto rep = testing_support::random_rep(rng, Shape{3, 3, 3});
  TruncatedRing ring(5, 2);
  EnumerationOptions one{10'000'000, 1}, four{10'000'000, 4};
  CHECK(kernel_census(rep, ring, one).histogram == kernel_census(rep, ring, four).histogram);
}

TEST_CASE("1x1 matrices over Z/p^n") {
  MRep mat1(Shape{1, 1, 1}, {1});
  for (int n = 0; n <= 4; ++n) {
    TruncatedRing ring(3, n);
    CHECK(ask_m(mat1, ring).value == oracle::ask(mat1, ring));
  }
}

TEST_CASE("empty and degenerate shapes") {
  TruncatedRing ring(3, 1);
  CHECK(ask_m(MRep(Shape{0, 2, 2}), ring).value == 9);
  CHECK(ask_m(MRep(Shape{2, 0, 2}), ring).value == 1);
  CHECK(ask_m(MRep(Shape{2, 2, 0}), ring).value == 9);
  CHECK(ask_m(MRep(Shape{2, 2, 2}), ring, 2).value == 81);
}

TEST_CASE("budget and strategy errors") {
  MRep big(Shape{8, 2, 2});
  CHECK_THROWS_AS(ask_m(big, TruncatedRing(5, 2), 1, Strategy::direct), BudgetExceeded);
  EnumerationOptions tiny{10, 1};
  CHECK_THROWS_AS(ask_m(MRep(Shape{2, 1, 1}), TruncatedRing(5, 1), 1, Strategy::direct, tiny),
                  BudgetExceeded);
  CHECK_THROWS_AS(ask_m(big, TruncatedRing(2, 1), 2, Strategy::circ), std::invalid_argument);
  CHECK_THROWS_AS(ask_m(big, TruncatedRing(2, 1), 2, Strategy::bullet), std::invalid_argument);
  CHECK_THROWS_AS(ask_m(big, TruncatedRing(2, 1), 0), std::invalid_argument);
  CHECK(parse_strategy("bullet") == Strategy::bullet);
  CHECK_THROWS_AS(parse_strategy("fast"), std::invalid_argument);
}

TEST_CASE("auto strategy picks the smallest side") {
  TruncatedRing ring(2, 1);
  CHECK(ask_m(MRep(Shape{4, 2, 3}), ring).strategy == Strategy::circ);
  CHECK(ask_m(MRep(Shape{4, 3, 1}), ring).strategy == Strategy::bullet);
  CHECK(ask_m(MRep(Shape{1, 3, 3}), ring).strategy == Strategy::direct);
  CHECK(ask_m(MRep(Shape{4, 2, 3}), ring, 2).strategy == Strategy::direct);
}

TEST_CASE("zeta coefficients stop at the budget") {
  MRep mat1(Shape{1, 1, 1}, {1});
  auto z = zeta_coeffs(mat1, 2, 1, 4);
  REQUIRE(z.complete());
  REQUIRE(z.coeffs.size() == 5);
  CHECK(z.coeffs[0] == 1);
  for (int n = 1; n <= 4; ++n) CHECK(z.coeffs[n] == oracle::ask(mat1, TruncatedRing(2, n)));
  EnumerationOptions tiny{16, 1};
  auto partial = zeta_coeffs(MRep(Shape{2, 1, 1}, {1, 0}), 2, 1, 5, Strategy::direct, tiny);
  CHECK_FALSE(partial.complete());
  CHECK(*partial.failed_level == 3);
  CHECK(partial.coeffs.size() == 3);
}
