#include "askzeta/mrep.hpp"

#include <algorithm>
#include <stdexcept>

#include "askzeta/detail/odometer.hpp"
#include "askzeta/polynom.hpp"

namespace askzeta {

MRep::MRep(Shape shape) : shape_(shape), coeffs_(shape.l * shape.d * shape.e) {}

MRep::MRep(Shape shape, std::vector<BigInt> coeffs) : shape_(shape), coeffs_(std::move(coeffs)) {
  validate(*this);
}

MRep MRep::from_nested(Shape shape, const Nested& coeffs) {
  if (coeffs.size() != shape.l) {
    throw std::invalid_argument("coeffs: expected " + std::to_string(shape.l) +
                                " matrices, got " + std::to_string(coeffs.size()));
  }
  MRep rep(shape);
  for (std::size_t h = 0; h < shape.l; ++h) {
    if (coeffs[h].size() != shape.d) {
      throw std::invalid_argument("coeffs[" + std::to_string(h) + "]: expected " +
                                  std::to_string(shape.d) + " rows, got " +
                                  std::to_string(coeffs[h].size()));
    }
    for (std::size_t i = 0; i < shape.d; ++i) {
      if (coeffs[h][i].size() != shape.e) {
        throw std::invalid_argument("coeffs[" + std::to_string(h) + "][" + std::to_string(i) +
                                    "]: expected " + std::to_string(shape.e) +
                                    " entries, got " + std::to_string(coeffs[h][i].size()));
      }
      for (std::size_t j = 0; j < shape.e; ++j) rep.at(h, i, j) = coeffs[h][i][j];
    }
  }
  return rep;
}

MRep::Nested MRep::to_nested() const {
  Nested out(shape_.l, std::vector<std::vector<BigInt>>(shape_.d, std::vector<BigInt>(shape_.e)));
  for (std::size_t h = 0; h < shape_.l; ++h)
    for (std::size_t i = 0; i < shape_.d; ++i)
      for (std::size_t j = 0; j < shape_.e; ++j) out[h][i][j] = at(h, i, j);
  return out;
}

bool MRep::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

std::vector<std::int64_t> MRep::reduced(const TruncatedRing& ring) const {
  std::vector<std::int64_t> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = ring.reduce(coeffs_[k]);
  return out;
}

void validate(const MRep& rep) {
  const auto& s = rep.shape();
  if (rep.coeffs().size() != s.l * s.d * s.e) {
    throw std::invalid_argument("tensor has " + std::to_string(rep.coeffs().size()) +
                                " coefficients but shape (" + std::to_string(s.l) + "," +
                                std::to_string(s.d) + "," + std::to_string(s.e) + ") needs " +
                                std::to_string(s.l * s.d * s.e));
  }
}

RingMatrix evaluate_at(const MRep& rep, std::span<const std::int64_t> a,
                       const TruncatedRing& ring) {
  if (a.size() != rep.l()) {
    throw std::invalid_argument("evaluate_at: parameter has length " + std::to_string(a.size()) +
                                ", expected " + std::to_string(rep.l()));
  }
  RingMatrix out(rep.d(), rep.e());
  for (std::size_t h = 0; h < rep.l(); ++h) {
    const std::int64_t ah = ring.reduce(a[h]);
    if (ah == 0) continue;
    for (std::size_t i = 0; i < rep.d(); ++i)
      for (std::size_t j = 0; j < rep.e(); ++j)
        out.at(i, j) = ring.add(out.at(i, j), ring.mul(ah, ring.reduce(rep.at(h, i, j))));
  }
  return out;
}

DualKind parse_dual_kind(const std::string& name) {
  if (name == "circ") return DualKind::circ;
  if (name == "bullet") return DualKind::bullet;
  if (name == "vee") return DualKind::vee;
  throw std::invalid_argument("unknown dual '" + name + "' (expected circ, bullet or vee)");
}

std::string to_string(DualKind kind) {
  switch (kind) {
    case DualKind::circ:
      return "circ";
    case DualKind::bullet:
      return "bullet";
    case DualKind::vee:
      return "vee";
  }
  return "?";
}

MRep dual(const MRep& rep, DualKind kind) {
  const auto [l, d, e] = rep.shape();
  switch (kind) {
    case DualKind::circ: {
      MRep out(Shape{d, l, e});
      for (std::size_t h = 0; h < l; ++h)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < e; ++j) out.at(i, h, j) = rep.at(h, i, j);
      return out;
    }
    case DualKind::bullet: {
      MRep out(Shape{e, d, l});
      for (std::size_t h = 0; h < l; ++h)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < e; ++j) out.at(j, i, h) = rep.at(h, i, j);
      return out;
    }
    case DualKind::vee: {
      MRep out(Shape{l, e, d});
      for (std::size_t h = 0; h < l; ++h)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < e; ++j) out.at(h, j, i) = rep.at(h, i, j);
      return out;
    }
  }
  throw std::logic_error("unreachable dual kind");
}

MRep direct_sum(const MRep& first, const MRep& second) {
  const Shape a = first.shape(), b = second.shape();
  MRep out(Shape{a.l + b.l, a.d + b.d, a.e + b.e});
  for (std::size_t h = 0; h < a.l; ++h)
    for (std::size_t i = 0; i < a.d; ++i)
      for (std::size_t j = 0; j < a.e; ++j) out.at(h, i, j) = first.at(h, i, j);
  for (std::size_t h = 0; h < b.l; ++h)
    for (std::size_t i = 0; i < b.d; ++i)
      for (std::size_t j = 0; j < b.e; ++j) out.at(a.l + h, a.d + i, a.e + j) = second.at(h, i, j);
  return out;
}

CollapseSide parse_collapse_side(const std::string& name) {
  if (name == "mod") return CollapseSide::module;
  if (name == "dom") return CollapseSide::domain;
  if (name == "cod") return CollapseSide::codomain;
  throw std::invalid_argument("unknown collapse mode '" + name + "' (expected mod, dom or cod)");
}

MRep collapse(std::span<const MRep> summands, CollapseSide side) {
  if (summands.empty()) {
    throw std::invalid_argument("collapse: need at least one summand");
  }
  const Shape first = summands.front().shape();
  Shape total{0, 0, 0};
  for (const auto& s : summands) {
    const Shape sh = s.shape();
    const bool shared_ok = (side == CollapseSide::module && sh.l == first.l) ||
                           (side == CollapseSide::domain && sh.d == first.d) ||
                           (side == CollapseSide::codomain && sh.e == first.e);
    if (!shared_ok) {
      throw std::invalid_argument("collapse: summands do not share the collapsed side");
    }
    total.l += sh.l;
    total.d += sh.d;
    total.e += sh.e;
  }
  switch (side) {
    case CollapseSide::module:
      total.l = first.l;
      break;
    case CollapseSide::domain:
      total.d = first.d;
      break;
    case CollapseSide::codomain:
      total.e = first.e;
      break;
  }

  MRep out(total);
  std::size_t ol = 0, od = 0, oe = 0;
  for (const auto& s : summands) {
    const Shape sh = s.shape();
    const std::size_t bl = side == CollapseSide::module ? 0 : ol;
    const std::size_t bd = side == CollapseSide::domain ? 0 : od;
    const std::size_t be = side == CollapseSide::codomain ? 0 : oe;
    for (std::size_t h = 0; h < sh.l; ++h)
      for (std::size_t i = 0; i < sh.d; ++i)
        for (std::size_t j = 0; j < sh.e; ++j) out.at(bl + h, bd + i, be + j) = s.at(h, i, j);
    ol += sh.l;
    od += sh.d;
    oe += sh.e;
  }
  return out;
}

MRep collapsed_power(const MRep& rep, unsigned m, CollapseSide side) {
  if (m == 0) {
    throw std::invalid_argument("collapsed_power: m must be at least 1");
  }
  std::vector<MRep> copies(m, rep);
  return collapse(copies, side);
}

MRep alternating_hull(const MRep& rep) {
  const auto [l, d, e] = rep.shape();
  MRep out(Shape{d + l, d + l, e});
  for (std::size_t h = 0; h < l; ++h)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j) {
        const BigInt& c = rep.at(h, i, j);
        if (c == 0) continue;
        out.at(d + h, i, j) = c;  // x o a'
        out.at(i, d + h, j) = -c;  // - x' o a
      }
  return out;
}

MRep scalar_multiply(const MRep& rep, const BigInt& factor) {
  std::vector<BigInt> scaled = rep.coeffs();
  for (auto& c : scaled) c *= factor;
  return MRep(rep.shape(), std::move(scaled));
}

bool is_alternating(const MRep& rep) {
  if (rep.l() != rep.d()) return false;
  for (std::size_t h = 0; h < rep.l(); ++h)
    for (std::size_t j = 0; j < rep.e(); ++j) {
      if (rep.at(h, h, j) != 0) return false;
      for (std::size_t i = h + 1; i < rep.d(); ++i)
        if (rep.at(h, i, j) + rep.at(i, h, j) != 0) return false;
    }
  return true;
}

HomotopyTriple HomotopyTriple::identity(const Shape& shape) {
  return {IntMatrix::identity(shape.l), IntMatrix::identity(shape.d),
          IntMatrix::identity(shape.e)};
}

bool verify_homotopy(const HomotopyTriple& triple, const MRep& source, const MRep& target,
                     const TruncatedRing& ring) {
  const Shape s = source.shape(), t = target.shape();
  const auto& nu = triple.module_map;
  const auto& phi = triple.domain_map;
  const auto& psi = triple.codomain_map;
  if (nu.rows != s.l || nu.cols != t.l || phi.rows != s.d || phi.cols != t.d ||
      psi.rows != s.e || psi.cols != t.e) {
    throw std::invalid_argument("verify_homotopy: triple shapes do not match the representations");
  }
  const auto src = source.reduced(ring);
  const auto tgt = target.reduced(ring);
  const RingMatrix nu_r = reduce_mod(nu, ring), phi_r = reduce_mod(phi, ring),
                   psi_r = reduce_mod(psi, ring);
  for (std::size_t h = 0; h < s.l; ++h)
    for (std::size_t i = 0; i < s.d; ++i)
      for (std::size_t jt = 0; jt < t.e; ++jt) {
        std::int64_t lhs = 0;
        for (std::size_t j = 0; j < s.e; ++j)
          lhs = ring.add(lhs, ring.mul(src[(h * s.d + i) * s.e + j], psi_r.at(j, jt)));
        std::int64_t rhs = 0;
        for (std::size_t ht = 0; ht < t.l; ++ht) {
          if (nu_r.at(h, ht) == 0) continue;
          for (std::size_t it = 0; it < t.d; ++it) {
            const std::int64_t w = ring.mul(nu_r.at(h, ht), phi_r.at(i, it));
            rhs = ring.add(rhs, ring.mul(w, tgt[(ht * t.d + it) * t.e + jt]));
          }
        }
        if (lhs != rhs) return false;
      }
  return true;
}

MRep adjoint_rep(const MRep& structure_constants) {
  const Shape s = structure_constants.shape();
  if (s.l != s.d || s.d != s.e) {
    throw std::invalid_argument("adjoint_rep: structure constants must have shape (n,n,n)");
  }
  if (!is_alternating(structure_constants)) {
    throw std::invalid_argument("adjoint_rep: bracket is not anticommutative");
  }
  return structure_constants;
}

ConstantRankResult constant_rank_check(const MRep& rep, const TruncatedRing& residue_field) {
  if (residue_field.level() != 1) {
    throw std::invalid_argument("constant_rank_check: requires a residue field (n = 1)");
  }
  if (rep.l() == 0) {
    throw std::invalid_argument("constant_rank_check: module side is zero");
  }
  ConstantRankResult result{true, -1};
  detail::Odometer odo(rep.l(), residue_field.prime());
  while (odo.advance() >= 0) {
    const auto& a = odo.digits();
    // projective representatives: first nonzero coordinate equals 1
    auto first = std::find_if(a.begin(), a.end(), [](std::int64_t x) { return x != 0; });
    if (*first != 1) continue;
    const int r = unit_rank(evaluate_at(rep, a, residue_field), residue_field);
    if (result.rank < 0) {
      result.rank = r;
    } else if (r != result.rank) {
      result.constant = false;
      result.rank = std::max(result.rank, r);
    }
  }
  return result;
}

bool KMinimalityReport::all_levels_ok() const {
  return std::all_of(level_ok.begin(), level_ok.end(), [](bool b) { return b; });
}

KMinimalityReport kminimality_check(const MRep& rep, std::int64_t p, int max_level, int r) {
  KMinimalityReport report;
  for (int n = 1; n <= max_level; ++n) {
    const TruncatedRing ring(p, n);
    const int expected = n * (static_cast<int>(rep.d()) - r);
    bool ok = true;
    detail::Odometer odo(rep.l(), ring.modulus());
    do {
      const auto& a = odo.digits();
      if (std::none_of(a.begin(), a.end(), [&](std::int64_t x) { return x % p != 0; })) continue;
      if (kernel_exponent(evaluate_at(rep, a, ring), ring) != expected) {
        ok = false;
        break;
      }
    } while (odo.advance() >= 0);
    report.level_ok.push_back(ok);
  }
  if (rep.l() > 0) {
    const auto cr = constant_rank_check(rep, TruncatedRing(p, 1));
    report.certified = cr.constant && cr.rank == r && generic_rank(rep) == r;
  }
  return report;
}

}  // namespace askzeta
