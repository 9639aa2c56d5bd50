#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/polynom.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace askzeta;

TEST_CASE("band and Hankel matrices") {
  auto b = make_example("band", {.r = 2});
  CHECK(b.shape() == Shape{2, 3, 2});
  CHECK(b.to_nested() == MRep::Nested{{{1, 0}, {0, 1}, {0, 0}}, {{0, 0}, {1, 0}, {0, 1}}});
  for (long long r = 1; r <= 4; ++r) {
    auto band = make_example("band", {.r = r});
    CHECK(dual(band, DualKind::bullet) == band);
    CHECK(dual(band, DualKind::circ) == make_example("hankel", {.r = r}));
  }
  auto h = make_example("hankel", {.r = 2});
  CHECK(h.shape() == Shape{3, 2, 2});
  CHECK(h.at(1, 0, 1) == 1);
  CHECK(h.at(1, 1, 0) == 1);
}

TEST_CASE("staircase matrices") {
  auto g = make_example("gamma", {.d = 2});
  CHECK(g.shape() == Shape{2, 3, 2});
  TruncatedRing r(5, 1);
  CHECK(evaluate_at(g, std::vector<std::int64_t>{1, 0}, r).data ==
        std::vector<std::int64_t>{1, 0, 0, 1, 0, 0});
  CHECK(make_example("gamma", {.d = 3}).shape() == Shape{3, 6, 3});
  CHECK(generic_rank(g) == 2);
  auto cr = constant_rank_check(g, TruncatedRing(3, 1));
  CHECK_FALSE(cr.constant);
  CHECK(cr.rank == 2);
}

TEST_CASE("Westwick matrices") {
  auto a1 = make_example("westwick_a", {.r = 1});
  CHECK(a1.shape() == Shape{3, 3, 3});
  // rows [0, X0, -X1], [X0, 0, X2], [X1, X2, 0]
  MRep expected(Shape{3, 3, 3});
  expected.at(0, 0, 1) = 1;
  expected.at(1, 0, 2) = -1;
  expected.at(0, 1, 0) = 1;
  expected.at(2, 1, 2) = 1;
  expected.at(1, 2, 0) = 1;
  expected.at(2, 2, 1) = 1;
  CHECK(a1 == expected);

  auto a2 = make_example("westwick_a", {.r = 2});
  CHECK(a2.shape() == Shape{5, 5, 3});
  CHECK(a2.at(2, 1, 2) == -1);  // -X2 in row 1
  CHECK(a2.at(1, 2, 1) == 0);   // the 0 in row 2
  CHECK(a2.at(3, 2, 2) == 1);
  CHECK(generic_rank(a2) == 3);

  auto bullet = dual(a2, DualKind::bullet);
  CHECK(bullet.shape() == Shape{3, 5, 5});
  auto cr = constant_rank_check(bullet, TruncatedRing(5, 1));
  CHECK(cr.constant);
  CHECK(cr.rank == 4);
  // a2 itself is not K-minimal: the unit vector e_r has rank 2
  auto km = kminimality_check(a2, 5, 1, 3);
  CHECK_FALSE(km.all_levels_ok());

  auto h2 = make_example("westwick_H", {.r = 2});
  CHECK(h2.shape() == Shape{3, 5, 5});
  CHECK(h2.at(1, 2, 2) == 0);   // alpha_{r+1} = 0
  CHECK(h2.at(2, 1, 2) == -1);  // beta_r = -1
  auto crh = constant_rank_check(h2, TruncatedRing(5, 1));
  CHECK(crh.constant);
  CHECK(crh.rank == 4);
}

TEST_CASE("alternating examples") {
  CHECK(is_alternating(make_example("type_F", {.d = 2})));
  CHECK(is_alternating(make_example("type_F", {.d = 3})));
  CHECK(make_example("type_F", {.d = 3}).shape() == Shape{3, 3, 3});
  CHECK(is_alternating(make_example("lie_heisenberg", {})));
  CHECK(make_example("lie_abelian", {.d = 2}).is_zero());
  CHECK_FALSE(is_alternating(make_example("matdxe", {.d = 1, .e = 1})));
  auto so2 = make_example("so", {.d = 2});
  CHECK(so2.shape() == Shape{1, 2, 2});
  CHECK(so2.at(0, 0, 1) == 1);
  CHECK(so2.at(0, 1, 0) == -1);
  auto so3 = make_example("so", {.d = 3});
  for (std::size_t h = 0; h < 3; ++h)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(so3.at(h, i, j) == -so3.at(h, j, i));
  auto sym3 = make_example("sym", {.d = 3});
  CHECK(sym3.shape() == Shape{6, 3, 3});
  CHECK(dual(sym3, DualKind::vee) == sym3);
  auto cr = constant_rank_check(so2, TruncatedRing(3, 1));
  CHECK(cr.constant);
  CHECK(cr.rank == 2);
}

TEST_CASE("census examples") {
  auto census = kernel_census(make_example("so", {.d = 2}), TruncatedRing(3, 1));
  CHECK(census.histogram == std::map<int, std::uint64_t>{{0, 2}, {2, 1}});
  auto g = kernel_census(make_example("gamma", {.d = 2}), TruncatedRing(2, 1));
  CHECK(g.histogram == std::map<int, std::uint64_t>{{1, 2}, {2, 1}, {3, 1}});
  auto m = kernel_census(make_example("matdxe", {.d = 1, .e = 1}), TruncatedRing(2, 1));
  CHECK(m.histogram == std::map<int, std::uint64_t>{{0, 1}, {1, 1}});
}

TEST_CASE("type G is the bullet dual of the matrix inclusion") {
  for (long long d = 1; d <= 3; ++d)
    CHECK(dual(make_example("type_G", {.d = d}), DualKind::bullet) ==
          make_example("matdxe", {.d = d, .e = d}));
}

TEST_CASE("registry") {
  for (const auto& entry : catalog_list()) {
    CatalogParams p;
    for (const auto& name : entry.params) {
      if (name == "d") p.d = 2;
      if (name == "e") p.e = 2;
      if (name == "r") p.r = 2;
      if (name == "l") p.l = 1;
    }
    CHECK_NOTHROW((void)make_example(entry.name, p));
    for (const auto& [ex, fp] : expected_forms(entry.name, p))
      CHECK_NOTHROW((void)closed_form(ex.form, fp, 3));
  }
  CHECK(catalog_entry("band").expectations.at(0).form == "band");
  CHECK(catalog_entry("hankel").expectations.at(0).form == "hankel");
  CHECK(catalog_entry("type_F").expectations.at(0).condition == "p odd");
  CHECK_THROWS_AS(make_example("nothing", {}), std::invalid_argument);
  CHECK_THROWS_AS(make_example("band", {}), std::invalid_argument);
  CHECK_THROWS_AS(make_example("band", {.r = 0}), std::invalid_argument);
  CHECK(expected_forms("matdxe", {.d = 2, .e = 3}).size() == 1);
  CHECK(expected_forms("matdxe", {.d = 2, .e = 2}).size() == 2);
}

TEST_CASE("closed forms of small examples match brute force") {
  struct Case {
    std::string name;
    CatalogParams params;
  };
  const Case cases[] = {{"matdxe", {.d = 2, .e = 1}}, {"band", {.r = 2}}, {"hankel", {.r = 2}},
                        {"gamma", {.d = 2}},          {"zero", {.l = 1, .d = 2, .e = 1}}};
  for (const auto& c : cases) {
    auto rep = make_example(c.name, c.params);
    for (const auto& [ex, fp] : expected_forms(c.name, c.params)) {
      if (ex.statistic != Statistic::ask) continue;
      for (long long p : {2, 3}) {
        auto series = closed_form(ex.form, fp, p).expand(2);
        for (int n = 0; n <= 2; ++n) {
          CAPTURE(c.name);
          CAPTURE(ex.moment);
          CHECK(series[n] == oracle::ask(rep, TruncatedRing(p, n), ex.moment));
        }
      }
    }
  }
}
