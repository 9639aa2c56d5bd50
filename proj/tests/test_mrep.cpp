#include <random>

#include "askzeta/mrep.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace askzeta;

namespace {

MRep mat1() { return MRep(Shape{1, 1, 1}, {1}); }

MRep heisenberg() {
  MRep lie(Shape{3, 3, 3});
  lie.at(1, 0, 2) = 1;  // [e0, e1] = e2
  lie.at(0, 1, 2) = -1;
  return lie;
}

}  // namespace

TEST_CASE("nested construction reports the offending field") {
  MRep::Nested good{{{1, 2}}, {{3, 4}}};
  auto rep = MRep::from_nested(Shape{2, 1, 2}, good);
  CHECK(rep.at(1, 0, 1) == 4);
  CHECK(rep.to_nested() == good);

  MRep::Nested ragged{{{1, 2}}, {{3}}};
  try {
    (void)MRep::from_nested(Shape{2, 1, 2}, ragged);
    FAIL("expected an exception");
  } catch (const std::invalid_argument& err) {
    CHECK(std::string(err.what()).find("coeffs[1][0]") != std::string::npos);
  }
  CHECK_THROWS_AS(MRep::from_nested(Shape{3, 1, 2}, good), std::invalid_argument);
  CHECK_THROWS_AS(MRep(Shape{2, 2, 2}, std::vector<BigInt>(7)), std::invalid_argument);
}

TEST_CASE("evaluation of a parameter") {
  TruncatedRing r(5, 1);
  auto rep = MRep::from_nested(Shape{2, 2, 2}, {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}});
  std::vector<std::int64_t> a{2, 3};
  auto m = evaluate_at(rep, a, r);
  CHECK(m.data == std::vector<std::int64_t>{2, 3, 2, 2});
  CHECK_THROWS_AS(evaluate_at(rep, std::vector<std::int64_t>{1}, r), std::invalid_argument);
}

TEST_CASE("duals are involutive index permutations") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Shape s{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
    auto rep = testing_support::random_rep(rng, s);
    CHECK(dual(rep, DualKind::circ).shape() == Shape{s.d, s.l, s.e});
    CHECK(dual(rep, DualKind::bullet).shape() == Shape{s.e, s.d, s.l});
    CHECK(dual(rep, DualKind::vee).shape() == Shape{s.l, s.e, s.d});
    for (auto k : {DualKind::circ, DualKind::bullet, DualKind::vee})
      CHECK(dual(dual(rep, k), k) == rep);
    // braid relation
    auto braided = dual(dual(dual(rep, DualKind::circ), DualKind::bullet), DualKind::circ);
    CHECK(braided == dual(rep, DualKind::vee));
    auto other = dual(dual(dual(rep, DualKind::bullet), DualKind::circ), DualKind::bullet);
    CHECK(other == dual(rep, DualKind::vee));
  }
  CHECK(parse_dual_kind("vee") == DualKind::vee);
  CHECK_THROWS_AS(parse_dual_kind("star"), std::invalid_argument);
}

TEST_CASE("circ negates an alternating tensor") {
  auto lie = heisenberg();
  CHECK(is_alternating(lie));
  CHECK(dual(lie, DualKind::circ) == scalar_multiply(lie, -1));
  auto hull = alternating_hull(mat1());
  CHECK(dual(hull, DualKind::circ) == scalar_multiply(hull, -1));
}

TEST_CASE("alternating hull of the 1x1 matrix representation") {
  auto hull = alternating_hull(mat1());
  CHECK(hull.shape() == Shape{2, 2, 1});
  CHECK(hull.at(1, 0, 0) == 1);
  CHECK(hull.at(0, 1, 0) == -1);
  CHECK(hull.at(0, 0, 0) == 0);
  CHECK(hull.at(1, 1, 0) == 0);
  CHECK(is_alternating(hull));
}

TEST_CASE("hull is alternating and its bullet dual is the block skew matrix") {
  std::mt19937_64 rng(12);
  TruncatedRing r(7, 1);
  for (int trial = 0; trial < 20; ++trial) {
    Shape s{1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 3};
    auto rep = testing_support::random_rep(rng, s);
    auto hull = alternating_hull(rep);
    CHECK(hull.shape() == Shape{s.d + s.l, s.d + s.l, s.e});
    CHECK(is_alternating(hull));
    auto hb = dual(hull, DualKind::bullet);
    auto b = dual(rep, DualKind::bullet);
    auto psi = testing_support::random_matrix(rng, 1, s.e, 7);
    auto big = evaluate_at(hb, psi, r);
    auto small = evaluate_at(b, psi, r);  // d x l
    for (std::size_t i = 0; i < s.d; ++i)
      for (std::size_t h = 0; h < s.l; ++h) {
        CHECK(big.at(i, s.d + h) == small.at(i, h));
        CHECK(big.at(s.d + h, i) == r.neg(small.at(i, h)));
      }
    for (std::size_t i = 0; i < s.d; ++i)
      for (std::size_t k = 0; k < s.d; ++k) CHECK(big.at(i, k) == 0);
    for (std::size_t h = 0; h < s.l; ++h)
      for (std::size_t k = 0; k < s.l; ++k) CHECK(big.at(s.d + h, s.d + k) == 0);
  }
}

TEST_CASE("direct sums and collapses") {
  std::mt19937_64 rng(13);
  auto a = testing_support::random_rep(rng, Shape{2, 3, 1});
  auto b = testing_support::random_rep(rng, Shape{2, 1, 2});
  auto sum = direct_sum(a, b);
  CHECK(sum.shape() == Shape{4, 4, 3});
  CHECK(sum.at(2, 3, 1) == b.at(0, 0, 0));
  CHECK(sum.at(0, 3, 1) == 0);

  std::vector<MRep> pair{a, b};
  auto mod = collapse(pair, CollapseSide::module);
  CHECK(mod.shape() == Shape{2, 4, 3});
  CHECK(mod.at(1, 3, 2) == b.at(1, 0, 1));
  CHECK(mod.at(1, 0, 0) == a.at(1, 0, 0));
  CHECK(mod.at(1, 3, 0) == 0);

  auto c = testing_support::random_rep(rng, Shape{1, 3, 2});
  std::vector<MRep> same_domain{a, c};
  auto dom = collapse(same_domain, CollapseSide::domain);
  CHECK(dom.shape() == Shape{3, 3, 3});
  CHECK(dom.at(2, 1, 1) == c.at(0, 1, 0));
  CHECK(dom.at(2, 1, 0) == 0);

  auto f = testing_support::random_rep(rng, Shape{3, 2, 1});
  std::vector<MRep> same_codomain{a, f};
  auto cod = collapse(same_codomain, CollapseSide::codomain);
  CHECK(cod.shape() == Shape{5, 5, 1});
  CHECK(cod.at(4, 4, 0) == f.at(2, 1, 0));

  CHECK_THROWS_AS(collapse(pair, CollapseSide::domain), std::invalid_argument);
  CHECK_THROWS_AS(collapse(std::vector<MRep>{}, CollapseSide::module), std::invalid_argument);
  CHECK(collapsed_power(a, 3, CollapseSide::module).shape() == Shape{2, 9, 3});
  CHECK(collapsed_power(a, 1, CollapseSide::module) == a);
  CHECK_THROWS_AS(collapsed_power(a, 0, CollapseSide::module), std::invalid_argument);
  CHECK(parse_collapse_side("cod") == CollapseSide::codomain);
  CHECK_THROWS_AS(parse_collapse_side("x"), std::invalid_argument);
}

TEST_CASE("homotopy verification") {
  std::mt19937_64 rng(14);
  TruncatedRing r(3, 2);
  auto rep = testing_support::random_rep(rng, Shape{2, 2, 3});
  CHECK(verify_homotopy(HomotopyTriple::identity(rep.shape()), rep, rep, r));
  // scaling the codomain by 2 and the module by 2 is a homotopy rep -> rep
  HomotopyTriple t = HomotopyTriple::identity(rep.shape());
  for (std::size_t k = 0; k < 2; ++k) t.module_map.at(k, k) = 2;
  for (std::size_t k = 0; k < 3; ++k) t.codomain_map.at(k, k) = 2;
  CHECK(verify_homotopy(t, rep, rep, r));
  t.codomain_map.at(0, 0) = 1;
  if (!(rep.at(0, 0, 0) % 9 == 0 && rep.at(0, 1, 0) % 9 == 0 && rep.at(1, 0, 0) % 9 == 0 &&
        rep.at(1, 1, 0) % 9 == 0))
    CHECK_FALSE(verify_homotopy(t, rep, rep, r));
  HomotopyTriple bad{IntMatrix::identity(3), IntMatrix::identity(2), IntMatrix::identity(3)};
  CHECK_THROWS_AS(verify_homotopy(bad, rep, rep, r), std::invalid_argument);
}

TEST_CASE("adjoint representation") {
  auto lie = heisenberg();
  CHECK(adjoint_rep(lie) == lie);
  CHECK_THROWS_AS(adjoint_rep(MRep(Shape{2, 2, 1})), std::invalid_argument);
  MRep sym(Shape{2, 2, 2});
  sym.at(0, 1, 0) = 1;
  sym.at(1, 0, 0) = 1;
  CHECK_THROWS_AS(adjoint_rep(sym), std::invalid_argument);
}

TEST_CASE("constant rank and k-minimality") {
  // full 2x2 matrices are not of constant rank
  MRep mat2(Shape{4, 2, 2});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) mat2.at(i * 2 + j, i, j) = 1;
  auto cr = constant_rank_check(mat2, TruncatedRing(3, 1));
  CHECK_FALSE(cr.constant);
  CHECK(cr.rank == 2);
  // a 1 x 2 row (a, b) of linear forms has constant rank 1
  MRep row(Shape{2, 1, 2});
  row.at(0, 0, 0) = 1;
  row.at(1, 0, 1) = 1;
  auto cr2 = constant_rank_check(row, TruncatedRing(5, 1));
  CHECK(cr2.constant);
  CHECK(cr2.rank == 1);
  auto km = kminimality_check(row, 5, 2, 1);
  CHECK(km.level_ok.size() == 2);
  CHECK(km.all_levels_ok());
  CHECK(km.certified);
  auto km2 = kminimality_check(mat2, 2, 2, 2);
  CHECK_FALSE(km2.all_levels_ok());
  CHECK_FALSE(km2.certified);
  CHECK_THROWS_AS(constant_rank_check(row, TruncatedRing(5, 2)), std::invalid_argument);
  CHECK_THROWS_AS(constant_rank_check(MRep(Shape{0, 1, 1}), TruncatedRing(5, 1)),
                  std::invalid_argument);
}
