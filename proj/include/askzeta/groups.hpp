#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "askzeta/ask.hpp"
#include "askzeta/mrep.hpp"
#include "askzeta/rational.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

/// g_alpha: M x W with (a, y)(a', y') = (a + a', y + y' + a o a'), alpha alternating.
/// h_theta: M x V x W with (a, x, y)(a', x', y') = (a + a', x + x', y + x A(a') + y').
/// lazard:  a class-2 Lie ring L with X * Y = X + Y + [X, Y] / 2 (p odd), where
///          [X, Y]_j = sum X_i Y_h c[h][i][j].
enum class GroupKind { g_alpha, h_theta, lazard };

GroupKind parse_group_kind(const std::string& name);
std::string to_string(GroupKind kind);

struct GroupBudget {
  /// Largest group that may be constructed.
  std::uint64_t max_order = 59049;  // 3^10
  /// Largest group for the quadratic class-number scans.
  std::uint64_t max_class_scan = 10000;
  /// Worker threads for the centralizer scan; 0 = hardware concurrency.
  unsigned workers = 0;
};

/// Raised when a group or a class-number scan is larger than its budget.
using GroupBudgetExceeded = BudgetExceeded;

/// A finite group on tuples of residues in Z/p^n with a formula-defined product.
/// Elements are flat tuples; index() and element() give a mixed-radix
/// bijection with [0, order()).
class FiniteGroup {
 public:
  using Element = std::vector<std::int64_t>;

  FiniteGroup(GroupKind kind, const MRep& rep, const TruncatedRing& ring,
              const GroupBudget& budget = {});

  GroupKind kind() const { return kind_; }
  const TruncatedRing& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  std::uint64_t order() const { return order_; }

  Element identity() const { return Element(arity_, 0); }
  Element multiply(const Element& g, const Element& h) const;
  Element inverse(const Element& g) const;
  /// g^{-1} h^{-1} g h
  Element commutator(const Element& g, const Element& h) const;
  Element power(const Element& g, std::uint64_t k) const;

  std::uint64_t index(const Element& g) const;
  Element element(std::uint64_t index) const;

 private:
  // out_j += scale * sum_{h,i} u_i v_h c[h][i][j]
  void add_pairing(const std::int64_t* u, const std::int64_t* v, std::int64_t* out,
                   std::int64_t scale) const;

  GroupKind kind_;
  TruncatedRing ring_;
  Shape shape_;
  std::vector<std::int64_t> tensor_;
  std::size_t arity_ = 0;
  std::uint64_t order_ = 0;
  std::int64_t half_ = 0;  // inverse of 2 for the lazard product
};

/// k(G) = (1/|G|) sum_g |C_G(g)|.
std::uint64_t class_number(const FiniteGroup& group, const GroupBudget& budget = {});

/// k(G) as the number of orbits of G acting on itself by conjugation.
std::uint64_t class_number_by_orbits(const FiniteGroup& group, const GroupBudget& budget = {});

/// Lie tensor of g = M + W with bracket [(a, y), (a', y')] = (0, factor * (a o a')),
/// as a structure-constant tensor on the basis [M-block | W-block].
MRep lie_tensor_of(const MRep& alpha, const BigInt& factor = 1);

/// Anticommutative and every double bracket vanishes: [[x, y], z] = 0.
bool is_class_at_most_two(const MRep& lie);

struct IdentityCheck {
  std::string claim;
  std::string law;  // neutral identifier of the law being checked
  std::optional<Rational> expected;
  std::optional<Rational> computed;
  bool match = false;
  bool skipped = false;
  std::string note;
};

struct ClassIdentityReport {
  std::vector<IdentityCheck> checks;
  /// True when no performed check failed.
  bool ok() const;
};

/// Compares brute-force class numbers with ask values:
///   g_alpha: k(G_alpha) = |W| ask(2 alpha)         (alpha alternating, p odd)
///   h_theta: k(H_theta) = |W| ask(hull(theta))     (any p)
///   lazard:  k(exp(g_{2 alpha})) = ask(ad g_{2 alpha}) (alpha alternating, p odd)
/// Checks that do not apply are reported as skipped.
ClassIdentityReport verify_class_identities(const MRep& rep, const TruncatedRing& ring,
                                            const GroupBudget& budget = {});

/// k(exp L) = ask(ad L) for a class-2 Lie tensor over an odd prime.
IdentityCheck verify_lie_identity(const MRep& lie, const TruncatedRing& ring,
                                  const GroupBudget& budget = {});

}  // namespace askzeta
