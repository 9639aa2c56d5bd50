#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "askzeta/rational.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

struct Shape {
  std::size_t l = 0;  // rank of the parameter module M
  std::size_t d = 0;  // rank of the domain V
  std::size_t e = 0;  // rank of the codomain W

  bool operator==(const Shape&) const = default;
};

/// A module representation M -> Hom(V, W) between free modules, stored as its
/// structure constants c[h][i][j] over Z.
///
/// A parameter a in R^l evaluates to the d x e matrix
/// A(a)_{ij} = sum_h a_h c[h][i][j], which acts on row vectors x in R^d.
/// Coefficients are arbitrary-precision integers and are reduced only when a
/// ring is supplied, so one object serves every level Z/p^n.
class MRep {
 public:
  using Nested = std::vector<std::vector<std::vector<BigInt>>>;

  MRep() = default;
  explicit MRep(Shape shape);
  MRep(Shape shape, std::vector<BigInt> coeffs);

  /// Builds from nested arrays c[h][i][j], rejecting ragged input.
  static MRep from_nested(Shape shape, const Nested& coeffs);
  Nested to_nested() const;

  const Shape& shape() const { return shape_; }
  std::size_t l() const { return shape_.l; }
  std::size_t d() const { return shape_.d; }
  std::size_t e() const { return shape_.e; }

  BigInt& at(std::size_t h, std::size_t i, std::size_t j) { return coeffs_[index(h, i, j)]; }
  const BigInt& at(std::size_t h, std::size_t i, std::size_t j) const {
    return coeffs_[index(h, i, j)];
  }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;

  /// Coefficients reduced into [0, p^n), in the same h-major layout.
  std::vector<std::int64_t> reduced(const TruncatedRing& ring) const;

  bool operator==(const MRep&) const = default;

 private:
  std::size_t index(std::size_t h, std::size_t i, std::size_t j) const {
    return (h * shape_.d + i) * shape_.e + j;
  }

  Shape shape_;
  std::vector<BigInt> coeffs_;
};

/// Checks that the coefficient count matches the shape. Throws std::invalid_argument.
void validate(const MRep& rep);

RingMatrix evaluate_at(const MRep& rep, std::span<const std::int64_t> a, const TruncatedRing& ring);

/// Knuth duals as index permutations of c[h][i][j]:
/// circ swaps (h, i), bullet swaps (h, j), vee swaps (i, j).
enum class DualKind { circ, bullet, vee };

DualKind parse_dual_kind(const std::string& name);
std::string to_string(DualKind kind);

MRep dual(const MRep& rep, DualKind kind);

/// Block-diagonal sum on all three sides.
MRep direct_sum(const MRep& first, const MRep& second);

/// Which side of a direct sum is collapsed onto a single shared copy.
enum class CollapseSide {
  module,    // diagonal on M: a -> blockdiag(A_1(a), A_2(a), ...)
  domain,    // diagonal on V: x -> (x A_1, x A_2, ...)
  codomain,  // sum on W: (x_1, x_2, ...) -> sum_k x_k A_k
};

CollapseSide parse_collapse_side(const std::string& name);

MRep collapse(std::span<const MRep> summands, CollapseSide side);
MRep collapsed_power(const MRep& rep, unsigned m, CollapseSide side);

/// The alternating representation on V + M with
/// (x, a) o (x', a') = x o a' - x' o a, basis order [V-block | M-block].
MRep alternating_hull(const MRep& rep);

MRep scalar_multiply(const MRep& rep, const BigInt& factor);

/// l == d, c[h][i][j] = -c[i][h][j] and c[h][h][j] = 0.
bool is_alternating(const MRep& rep);

/// Homotopy (nu, phi, psi) from source to target: nu is l x l', phi is
/// d x d', psi is e x e'.
struct HomotopyTriple {
  IntMatrix module_map;
  IntMatrix domain_map;
  IntMatrix codomain_map;

  static HomotopyTriple identity(const Shape& shape);
};

/// (x o a) psi == (x phi) o (a nu) on basis elements, modulo p^n.
/// Throws std::invalid_argument on shape mismatch.
bool verify_homotopy(const HomotopyTriple& triple, const MRep& source, const MRep& target,
                     const TruncatedRing& ring);

/// Adjoint representation a -> (x -> [x, a]) of an anticommutative algebra
/// whose bracket has structure constants c[h][i][j] = coefficient of e_j in
/// [e_i, e_h]. Throws std::invalid_argument unless the tensor is anticommutative.
MRep adjoint_rep(const MRep& structure_constants);

struct ConstantRankResult {
  bool constant = false;
  int rank = 0;  // common rank, or the maximal rank when not constant
};

/// Ranks of A(a) over F_p for all nonzero a (projective representatives).
/// Requires level 1 and l >= 1.
ConstantRankResult constant_rank_check(const MRep& rep, const TruncatedRing& residue_field);

struct KMinimalityReport {
  std::vector<bool> level_ok;  // index n - 1 holds the verdict at level n
  /// Constant rank r over F_p, which upgrades the per-level evidence to a proof.
  bool certified = false;

  bool all_levels_ok() const;
};

/// For each level n <= max_level: every a not divisible by p has
/// |Ker A(a)| = p^{n(d - r)}.
KMinimalityReport kminimality_check(const MRep& rep, std::int64_t p, int max_level, int r);

}  // namespace askzeta
