#include <random>

#include "askzeta/polynom.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace askzeta;

namespace {

MRep full_matrix_rep(std::size_t d, std::size_t e) {
  MRep rep(Shape{d * e, d, e});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < e; ++j) rep.at(i * e + j, i, j) = 1;
  return rep;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  auto x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  auto f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.total_degree() == 2);
  CHECK(f.is_homogeneous());
  CHECK_FALSE((x + MultiPoly::constant(2, 1)).is_homogeneous());
  CHECK(exact_divide(f, x + y) == x - y);
  CHECK_THROWS_AS(exact_divide(f, x * x * y), std::domain_error);
  CHECK_THROWS_AS(exact_divide(f, MultiPoly(2)), std::domain_error);
  CHECK(exact_divide(MultiPoly::constant(2, 6) * x, MultiPoly::constant(2, 3)) ==
        MultiPoly::constant(2, 2) * x);
  CHECK(MultiPoly(2).total_degree() == -1);
  CHECK(partial(x * x * y, 0) == MultiPoly::constant(2, 2) * x * y);
  std::vector<BigInt> pt{3, 5};
  CHECK(eval(f, pt) == -16);
  CHECK_THROWS_AS((void)eval(f, std::vector<BigInt>{1}), std::invalid_argument);
  CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), std::invalid_argument);
}

TEST_CASE("determinant of the generic 2x2 matrix") {
  auto det = det_linear_matrix(full_matrix_rep(2, 2));
  auto z = [](std::size_t k) { return MultiPoly::variable(4, k); };
  CHECK(det == z(0) * z(3) - z(1) * z(2));
  CHECK(det.to_string().find("z1*z4") != std::string::npos);
}

TEST_CASE("Bareiss determinant matches the Leibniz expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 3, l = 1 + rng() % 3;
    auto rep = testing_support::random_rep(rng, Shape{l, n, n}, -2, 2);
    CHECK(det_linear_matrix(rep) == oracle::leibniz_det(rep));
  }
  CHECK_THROWS_AS(det_linear_matrix(full_matrix_rep(2, 3)), std::invalid_argument);
}

TEST_CASE("generic rank") {
  CHECK(generic_rank(full_matrix_rep(2, 3)) == 2);
  CHECK(generic_rank(MRep(Shape{2, 3, 3})) == 0);
  // skew-symmetric 3x3: a rank-2 generic form
  MRep so3(Shape{3, 3, 3});
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (int h = 0; h < 3; ++h) {
    so3.at(h, pairs[h][0], pairs[h][1]) = 1;
    so3.at(h, pairs[h][1], pairs[h][0]) = -1;
  }
  CHECK(generic_rank(so3) == 2);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto rep = testing_support::random_rep(rng, Shape{2, 3, 3}, -1, 1);
    // generic rank dominates the rank at any integer point
    std::vector<BigInt> point{BigInt(rng() % 7) - 3, BigInt(rng() % 7) - 3};
    std::vector<BigInt> entries(9);
    auto forms = linear_matrix(rep);
    for (std::size_t k = 0; k < 9; ++k) entries[k] = eval(forms[k], point);
    CHECK(generic_rank(rep) >= integer_rank(entries, 3, 3));
  }
}

TEST_CASE("integer rank") {
  CHECK(integer_rank({1, 2, 2, 4}, 2, 2) == 1);
  CHECK(integer_rank({1, 2, 3, 4}, 2, 2) == 2);
  CHECK(integer_rank({}, 0, 3) == 0);
  CHECK_THROWS_AS(integer_rank({1}, 2, 2), std::invalid_argument);
}

TEST_CASE("projective hypersurface counts") {
  auto z = [](std::size_t k) { return MultiPoly::variable(4, k); };
  auto quadric = z(0) * z(3) - z(1) * z(2);
  for (std::int64_t p : {2, 3, 5}) {
    auto res = count_hypersurface_points(quadric, TruncatedRing(p, 1));
    CHECK(res.points == (p + 1) * (p + 1));
    CHECK(res.smooth);
  }
  auto x = MultiPoly::variable(2, 0);
  auto double_point = count_hypersurface_points(x * x, TruncatedRing(3, 1));
  CHECK(double_point.points == 1);
  CHECK_FALSE(double_point.smooth);
  CHECK_THROWS_AS(count_hypersurface_points(x + MultiPoly::constant(2, 1), TruncatedRing(3, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_hypersurface_points(x, TruncatedRing(3, 2)), std::invalid_argument);
}
