#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/zeta_forms.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace askzeta;

namespace {
std::vector<Rational> r(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}
}  // namespace

TEST_CASE("polynomial basics") {
  QPolynomial a(r({1, 2, 0, 0}));
  CHECK(a.degree() == 1);
  CHECK(QPolynomial().degree() == -1);
  CHECK((a * a).coeffs() == r({1, 4, 4}));
  CHECK((a - a).is_zero());
  CHECK(a(Rational(1, 2)) == 2);
  CHECK(a.scaled_variable(3).coeffs() == r({1, 6}));
  CHECK(QPolynomial::one_minus(Rational(1, 3)).to_string() == "1 - 1/3*T");
}

TEST_CASE("expansion") {
  RationalFunction geo(QPolynomial::constant(1), QPolynomial::one_minus(2), 2);
  CHECK(geo.expand(2) == r({1, 2, 4}));
  RationalFunction unit(QPolynomial::one_minus(1), QPolynomial::one_minus(1), 2);
  CHECK(unit.expand(3) == r({1, 0, 0, 0}));
  CHECK_THROWS_AS(RationalFunction(QPolynomial::constant(1), QPolynomial(r({0, 1})), 2),
                  std::invalid_argument);
  auto f = closed_form("matdxe", FormParams{.d = 1, .e = 1}, 2);
  CHECK(f.expand(1) == std::vector<Rational>{1, Rational(3, 2)});
}

TEST_CASE("expansion agrees with long division") {
  for (const auto& name : closed_form_names()) {
    FormParams fp{.l = 2, .d = 2, .e = 3, .r = 2, .m = 2, .h_count = 4};
    for (long long q : {2, 3, 5}) {
      auto f = closed_form(name, fp, q);
      CAPTURE(name);
      CHECK(f.expand(6) == oracle::series(f.num.coeffs(), f.den.coeffs(), 6));
    }
  }
}

TEST_CASE("shift substitutes q^k T") {
  RationalFunction f(QPolynomial::constant(1), QPolynomial::one_minus(1), 3);
  CHECK(f.shift(0).expand(3) == f.expand(3));
  CHECK(f.shift(1).expand(2) == r({1, 3, 9}));
  CHECK(f.shift(1).shift(-1).expand(4) == f.expand(4));
}

TEST_CASE("function equality by cross-multiplication") {
  auto a = closed_form("hankel", FormParams{.r = 3}, 5);
  auto b = closed_form("matdxe", FormParams{.d = 3, .e = 3}, 5);
  CHECK(equal_as_functions(a, b));
  // scaling numerator and denominator does not change the function or its series
  RationalFunction scaled(a.num * QPolynomial::one_minus(7), a.den * QPolynomial::one_minus(7), 5);
  CHECK(equal_as_functions(a, scaled));
  CHECK(a.expand(5) == scaled.expand(5));
  CHECK_FALSE(equal_as_functions(a, closed_form("band", FormParams{.r = 3}, 5)));
  CHECK_FALSE(equal_as_functions(a, closed_form("hankel", FormParams{.r = 3}, 3)));
}

TEST_CASE("closed form parameter checks") {
  CHECK_THROWS_AS(closed_form("nope", {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form("matdxe", FormParams{.d = 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form("kmin", FormParams{.d = 2, .r = 3}, 2), std::invalid_argument);
  CHECK_THROWS_AS(closed_form("determinantal", FormParams{.h_count = -1}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(closed_form("band", {}, 0), std::invalid_argument);
}

TEST_CASE("kmin with d = r reduces to the injective form") {
  for (long long q : {2, 3}) {
    for (long long l = 1; l <= 3; ++l) {
      auto kmin = closed_form("kmin", FormParams{.l = l, .d = 2, .r = 2, .m = 1}, q);
      RationalFunction injective(QPolynomial::one_minus(rational_pow(q, -l)),
                                 QPolynomial::one_minus(rational_pow(q, 2 - l)) *
                                     QPolynomial::one_minus(1),
                                 q);
      CHECK(equal_as_functions(kmin, injective));
    }
  }
}

TEST_CASE("gamma form for d = 2, m = 1") {
  for (long long q : {2, 3, 5, 7}) {
    auto g = closed_form("gamma_m", FormParams{.d = 2, .m = 1}, q);
    auto shape = QPolynomial::one_minus(q);
    RationalFunction expected(QPolynomial::one_minus(1) * QPolynomial::one_minus(1),
                              shape * shape * shape, q);
    CHECK(equal_as_functions(g, expected));
    CHECK(g.expand(1)[1] == 3 * q - 2);
  }
  // the brute-force first moment of the staircase matrix agrees
  auto gamma2 = make_example("gamma", CatalogParams{.d = 2});
  CHECK(oracle::ask(gamma2, TruncatedRing(2, 1)) == 4);
  CHECK(oracle::ask(gamma2, TruncatedRing(3, 1)) == 7);
}

TEST_CASE("determinantal form for a linear form is the 1x1 matrix form") {
  for (long long q : {2, 3, 5}) {
    auto det = closed_form("determinantal", FormParams{.l = 1, .d = 1, .m = 1, .h_count = 0}, q);
    CHECK(equal_as_functions(det, closed_form("matdxe", FormParams{.d = 1, .e = 1}, q)));
  }
}

TEST_CASE("second moment form for 2x2 matrices has the expected first coefficient") {
  for (long long q : {2, 3}) {
    auto f = closed_form("ask2_matd", FormParams{.d = 1}, q);
    CHECK(f.expand(1)[1] == oracle::ask(make_example("matdxe", {.d = 1, .e = 1}),
                                        TruncatedRing(q, 1), 2));
  }
  CHECK(closed_form("ask2_matd", FormParams{.d = 1}, 2).expand(1)[1] == Rational(5, 2));
}

TEST_CASE("H_gamma class-number form relations") {
  for (long long d = 1; d <= 4; ++d) {
    const long long b = d * (d + 1) / 2, c = d * (d - 1) / 2;
    for (long long q : {2, 3, 5, 7}) {
      auto cc = closed_form("cc_H_gamma", FormParams{.d = d}, q);
      auto gamma2 = closed_form("gamma_m", FormParams{.d = d, .m = 2}, q);
      CHECK(equal_as_functions(cc, gamma2.shift(d - c)));
      auto mat = closed_form("matdxe", FormParams{.d = d, .e = d + 1}, q);
      CHECK(equal_as_functions(cc.shift(-(b + d)), mat));
    }
  }
}
