#include "doctest.h"
#include "askzeta/verify.hpp"
#include "oracles.hpp"

using namespace askzeta;

TEST_CASE("the random corpus is reproducible and within the stated ranges") {
  const auto a = random_corpus(5, 40);
  const auto b = random_corpus(5, 40);
  CHECK(a == b);
  CHECK(random_corpus(6, 40) != a);
  for (const auto& rep : a) {
    CHECK(rep.l() >= 1);
    CHECK(rep.l() <= 3);
    CHECK(rep.d() <= 3);
    CHECK(rep.e() <= 3);
    for (std::size_t h = 0; h < rep.l(); ++h)
      for (std::size_t i = 0; i < rep.d(); ++i)
        for (std::size_t j = 0; j < rep.e(); ++j) {
          CHECK(rep.at(h, i, j) >= -3);
          CHECK(rep.at(h, i, j) <= 3);
        }
  }
}

TEST_CASE("the harness enumerator agrees with the test oracle") {
  for (const auto& rep : random_corpus(11, 15)) {
    const TruncatedRing ring(3, 1);
    const std::vector<std::int64_t> a(rep.l(), 1);
    const RingMatrix m = evaluate_at(rep, a, ring);
    CHECK(enumerate_kernel(m, ring) == oracle::kernel_count(m.data, m.rows, m.cols, ring));
  }
}

TEST_CASE("acceptance reports do not depend on the worker count") {
  VerifyOptions one;
  one.corpus_size = 12;
  one.workers = 1;
  one.only = {1, 6, 12, 14};
  VerifyOptions many = one;
  many.workers = 4;
  const auto r1 = run_acceptance(one);
  const auto r4 = run_acceptance(many);
  REQUIRE(r1.size() == 4);
  CHECK(acceptance_to_json(r1, one) == acceptance_to_json(r4, many));
  for (const auto& r : r1) CHECK(r.pass);
}

TEST_CASE("a failing comparison is reported, not hidden") {
  VerifyOptions opts;
  opts.corpus_size = 0;  // corpus-wide criteria then have nothing to compare
  opts.only = {1};
  const auto r = run_acceptance(opts);
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].pass);
}
