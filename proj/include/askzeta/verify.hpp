#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "askzeta/json_io.hpp"
#include "askzeta/mrep.hpp"

namespace askzeta {

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  std::size_t corpus_size = 100;
  std::uint64_t budget = 10'000'000;
  unsigned workers = 0;  // 0 = hardware concurrency
  /// Criteria to run (1..14); empty means all.
  std::set<int> only;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::size_t comparisons = 0;
  std::size_t failures = 0;
  /// Every comparison for the small criteria; for corpus-wide criteria a
  /// summary plus the first failures.
  std::vector<ReportEntry> entries;
  double seconds = 0;
};

/// Seeded random tensors with l, d, e in 1..3 and entries in [-3, 3].
std::vector<MRep> random_corpus(std::uint64_t seed, std::size_t count);

/// The rings (p, n) of the random suite: (2,1), (2,2), (3,1), (3,2), (5,1).
std::vector<std::pair<std::int64_t, int>> corpus_rings();

/// #{x : x A = 0} by enumerating every x in (Z/p^n)^rows; independent of the
/// Smith-form code path.
std::uint64_t enumerate_kernel(const RingMatrix& a, const TruncatedRing& ring);

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

Json acceptance_to_json(const std::vector<CriterionResult>& results, const VerifyOptions& options);

}  // namespace askzeta
