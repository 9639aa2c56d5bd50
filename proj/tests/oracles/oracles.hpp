#pragma once

// Independent reference implementations used only by the tests. They follow
// the definitions literally (enumerate vectors, expand permutations) and share
// no elimination code with the library.

#include <cstdint>
#include <string>
#include <vector>

#include "askzeta/mrep.hpp"
#include "askzeta/polynom.hpp"
#include "askzeta/rational.hpp"
#include "askzeta/ring.hpp"

namespace oracle {

using askzeta::BigInt;
using askzeta::MRep;
using askzeta::Rational;
using askzeta::TruncatedRing;

/// #{x in R^rows : x A = 0} by enumerating every x.
std::uint64_t kernel_count(const std::vector<std::int64_t>& a, std::size_t rows,
                           std::size_t cols, const TruncatedRing& ring);

/// (1/q^{nl}) sum_a |Ker A(a)|^m, enumerating both a and x.
Rational ask(const MRep& rep, const TruncatedRing& ring, unsigned m = 1);

/// Kernel size histogram keyed by log_p |Ker|, by enumeration.
std::vector<std::uint64_t> census(const MRep& rep, const TruncatedRing& ring);

/// Leibniz expansion of det of the matrix of linear forms (d == e).
askzeta::MultiPoly leibniz_det(const MRep& rep);

/// Rank over F_p of an integer matrix by enumerating its row span:
/// rank = log_p #{x A : x in F_p^rows}.
int span_rank(const std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols,
              std::int64_t p);

/// Class number of G_alpha (kind "galpha"), H_theta ("htheta") or the class-2
/// Lie group X * Y = X + Y + [X, Y]/2 ("lazard") over Z/p^n, by literally
/// collecting conjugacy classes as sets of tuples.
std::uint64_t class_number(const std::string& kind, const MRep& rep, const TruncatedRing& ring);

/// Power-series coefficients of num/den by long division with exact rationals,
/// num and den given as coefficient lists in T.
std::vector<Rational> series(const std::vector<Rational>& num, const std::vector<Rational>& den,
                             std::size_t order);

}  // namespace oracle
