#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "askzeta/mrep.hpp"
#include "askzeta/rational.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

/// Multivariate polynomial over Z with a dense exponent vector per term.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const BigInt& value);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  void add_term(const Exponents& exps, const BigInt& coeff);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  std::optional<BigInt> constant_value() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly&) const = default;

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& other) const;

  std::size_t nvars_;
  std::map<Exponents, BigInt> terms_;
};

/// Quotient a / b when b divides a exactly; throws std::domain_error otherwise.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);

/// Throws std::invalid_argument when point.size() != nvars.
BigInt eval(const MultiPoly& f, std::span<const BigInt> point);
std::int64_t eval(const MultiPoly& f, std::span<const std::int64_t> point,
                  const TruncatedRing& modulus);

MultiPoly partial(const MultiPoly& f, std::size_t index);

/// The d x e matrix of linear forms sum_h z_h c[h][i][j], row-major.
std::vector<MultiPoly> linear_matrix(const MRep& rep);

/// det of the matrix of linear forms (requires d == e), by Bareiss elimination.
MultiPoly det_linear_matrix(const MRep& rep);

/// Rank over Q(z_1, ..., z_l) by fraction-free elimination with polynomial pivots.
int generic_rank(const MRep& rep);

/// Rank over Q of an integer matrix (row-major).
int integer_rank(std::vector<BigInt> entries, std::size_t rows, std::size_t cols);

struct HypersurfaceCount {
  BigInt points;  // projective F_p-points of F = 0
  bool smooth = false;
};

/// Projective point count of the hypersurface F = 0 over F_p and whether F
/// and all its partials have no common nonzero root. Requires level 1 and
/// homogeneous F.
HypersurfaceCount count_hypersurface_points(const MultiPoly& f, const TruncatedRing& field);

}  // namespace askzeta
