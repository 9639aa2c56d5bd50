#include "askzeta/groups.hpp"

#include <thread>

#include "askzeta/detail/odometer.hpp"

namespace askzeta {

GroupKind parse_group_kind(const std::string& name) {
  if (name == "galpha" || name == "g_alpha") return GroupKind::g_alpha;
  if (name == "htheta" || name == "h_theta") return GroupKind::h_theta;
  if (name == "lazard") return GroupKind::lazard;
  throw std::invalid_argument("unknown group kind '" + name +
                              "' (expected galpha, htheta or lazard)");
}

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::g_alpha:
      return "galpha";
    case GroupKind::h_theta:
      return "htheta";
    case GroupKind::lazard:
      return "lazard";
  }
  return "?";
}

FiniteGroup::FiniteGroup(GroupKind kind, const MRep& rep, const TruncatedRing& ring,
                         const GroupBudget& budget)
    : kind_(kind), ring_(ring), shape_(rep.shape()), tensor_(rep.reduced(ring)) {
  switch (kind) {
    case GroupKind::g_alpha:
      if (!is_alternating(rep)) {
        throw std::invalid_argument("galpha: the representation is not alternating");
      }
      arity_ = shape_.l + shape_.e;
      break;
    case GroupKind::h_theta:
      arity_ = shape_.l + shape_.d + shape_.e;
      break;
    case GroupKind::lazard:
      if (ring.prime() == 2) {
        throw std::invalid_argument("lazard: requires an odd prime");
      }
      if (shape_.l != shape_.d || shape_.d != shape_.e || !is_class_at_most_two(rep)) {
        throw std::invalid_argument("lazard: expects a class-2 Lie tensor of shape (n,n,n)");
      }
      arity_ = shape_.l;
      if (ring.level() > 0) half_ = ring.inverse(2);
      break;
  }
  const auto limit = static_cast<std::int64_t>(std::min<std::uint64_t>(budget.max_order, INT64_MAX));
  const std::int64_t order = detail::checked_power(ring.modulus(), arity_, limit);
  if (order < 0) {
    throw GroupBudgetExceeded("group of order " + std::to_string(ring.modulus()) + "^" +
                              std::to_string(arity_) + " exceeds the budget of " +
                              std::to_string(budget.max_order));
  }
  order_ = static_cast<std::uint64_t>(order);
}

void FiniteGroup::add_pairing(const std::int64_t* u, const std::int64_t* v, std::int64_t* out,
                              std::int64_t scale) const {
  const auto [l, d, e] = shape_;
  for (std::size_t h = 0; h < l; ++h) {
    if (v[h] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      if (u[i] == 0) continue;
      const std::int64_t w = ring_.mul(scale, ring_.mul(u[i], v[h]));
      const std::int64_t* c = &tensor_[(h * d + i) * e];
      for (std::size_t j = 0; j < e; ++j) out[j] = ring_.add(out[j], ring_.mul(w, c[j]));
    }
  }
}

FiniteGroup::Element FiniteGroup::multiply(const Element& g, const Element& h) const {
  Element out(arity_);
  for (std::size_t k = 0; k < arity_; ++k) out[k] = ring_.add(g[k], h[k]);
  const std::size_t l = shape_.l, d = shape_.d;
  switch (kind_) {
    case GroupKind::g_alpha:  // y += a o a'
      add_pairing(g.data(), h.data(), out.data() + l, 1);
      break;
    case GroupKind::h_theta:  // y += x A(a')
      add_pairing(g.data() + l, h.data(), out.data() + l + d, 1);
      break;
    case GroupKind::lazard:  // X + Y + [X, Y] / 2
      add_pairing(g.data(), h.data(), out.data(), half_);
      break;
  }
  return out;
}

FiniteGroup::Element FiniteGroup::inverse(const Element& g) const {
  Element out(arity_);
  for (std::size_t k = 0; k < arity_; ++k) out[k] = ring_.neg(g[k]);
  if (kind_ == GroupKind::h_theta) {  // (-a, -x, -y + x A(a))
    const std::size_t l = shape_.l, d = shape_.d;
    add_pairing(g.data() + l, g.data(), out.data() + l + d, 1);
  }
  return out;
}

FiniteGroup::Element FiniteGroup::commutator(const Element& g, const Element& h) const {
  return multiply(multiply(inverse(g), inverse(h)), multiply(g, h));
}

FiniteGroup::Element FiniteGroup::power(const Element& g, std::uint64_t k) const {
  Element result = identity(), base = g;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
  }
  return result;
}

std::uint64_t FiniteGroup::index(const Element& g) const {
  std::uint64_t idx = 0;
  for (std::int64_t x : g) idx = idx * static_cast<std::uint64_t>(ring_.modulus()) +
                                 static_cast<std::uint64_t>(x);
  return idx;
}

FiniteGroup::Element FiniteGroup::element(std::uint64_t idx) const {
  Element g(arity_);
  const auto base = static_cast<std::uint64_t>(ring_.modulus());
  for (std::size_t k = arity_; k-- > 0;) {
    g[k] = static_cast<std::int64_t>(idx % base);
    idx /= base;
  }
  return g;
}

namespace {

void require_scan_budget(const FiniteGroup& group, const GroupBudget& budget) {
  if (group.order() > budget.max_class_scan) {
    throw GroupBudgetExceeded("class-number scan of a group of order " +
                              std::to_string(group.order()) + " exceeds the budget of " +
                              std::to_string(budget.max_class_scan));
  }
}

}  // namespace

std::uint64_t class_number(const FiniteGroup& group, const GroupBudget& budget) {
  require_scan_budget(group, budget);
  const std::uint64_t n = group.order();
  std::vector<FiniteGroup::Element> elems;
  elems.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) elems.push_back(group.element(k));

  unsigned workers = budget.workers != 0 ? budget.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(n, 1))));
  std::vector<std::uint64_t> partial(workers, 0);
  auto scan = [&](unsigned w) {
    for (std::uint64_t a = n * w / workers; a < n * (w + 1) / workers; ++a)
      for (std::uint64_t b = 0; b < n; ++b)
        if (group.multiply(elems[a], elems[b]) == group.multiply(elems[b], elems[a])) ++partial[w];
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t commuting = 0;
  for (auto c : partial) commuting += c;
  if (commuting % n != 0) {
    throw std::logic_error("class_number: commuting pairs not divisible by the group order");
  }
  return commuting / n;
}

std::uint64_t class_number_by_orbits(const FiniteGroup& group, const GroupBudget& budget) {
  require_scan_budget(group, budget);
  const std::uint64_t n = group.order();
  std::vector<FiniteGroup::Element> elems, inverses;
  for (std::uint64_t k = 0; k < n; ++k) {
    elems.push_back(group.element(k));
    inverses.push_back(group.inverse(elems.back()));
  }
  std::vector<bool> seen(n, false);
  std::uint64_t classes = 0;
  for (std::uint64_t g = 0; g < n; ++g) {
    if (seen[g]) continue;
    ++classes;
    for (std::uint64_t x = 0; x < n; ++x)
      seen[group.index(group.multiply(group.multiply(elems[x], elems[g]), inverses[x]))] = true;
  }
  return classes;
}

MRep lie_tensor_of(const MRep& alpha, const BigInt& factor) {
  const auto [l, d, e] = alpha.shape();
  if (l != d) {
    throw std::invalid_argument("lie_tensor_of: needs a representation with l == d");
  }
  const std::size_t n = l + e;
  MRep lie(Shape{n, n, n});
  for (std::size_t h = 0; h < l; ++h)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j) lie.at(h, i, l + j) = factor * alpha.at(h, i, j);
  return lie;
}

bool is_class_at_most_two(const MRep& lie) {
  const auto [l, d, e] = lie.shape();
  if (l != d || d != e || !is_alternating(lie)) return false;
  // [[e_i, e_h], e_k]_t = sum_j c[h][i][j] c[k][j][t]
  for (std::size_t h = 0; h < l; ++h)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < l; ++k)
        for (std::size_t t = 0; t < e; ++t) {
          BigInt s = 0;
          for (std::size_t j = 0; j < e; ++j) s += lie.at(h, i, j) * lie.at(k, j, t);
          if (s != 0) return false;
        }
  return true;
}

bool ClassIdentityReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.skipped || c.match; });
}

namespace {

Rational ask_value(const MRep& rep, const TruncatedRing& ring) {
  return ask_m(rep, ring, 1, Strategy::automatic).value;
}

// Both counting methods must agree with each other and with the expected value.
void fill_counts(IdentityCheck& check, const FiniteGroup& group, const GroupBudget& budget) {
  const std::uint64_t by_centralizers = class_number(group, budget);
  const std::uint64_t by_orbits = class_number_by_orbits(group, budget);
  check.computed = Rational(by_centralizers);
  if (by_centralizers != by_orbits) {
    check.note = "centralizer count " + std::to_string(by_centralizers) +
                 " differs from orbit count " + std::to_string(by_orbits);
  }
  check.match = by_centralizers == by_orbits && check.expected == check.computed;
}

IdentityCheck skipped(std::string claim, std::string law, std::string note) {
  IdentityCheck c;
  c.claim = std::move(claim);
  c.law = std::move(law);
  c.skipped = true;
  c.note = std::move(note);
  return c;
}

}  // namespace

ClassIdentityReport verify_class_identities(const MRep& rep, const TruncatedRing& ring,
                                            const GroupBudget& budget) {
  ClassIdentityReport report;
  const BigInt w_size = big_pow(BigInt(ring.modulus()), static_cast<unsigned>(rep.e()));
  const bool alternating = is_alternating(rep);
  const bool odd = ring.prime() != 2;

  const std::string g_claim = "k(G_alpha) = |W| * ask(2 alpha)";
  if (!alternating) {
    report.checks.push_back(skipped(g_claim, "class-number-g-alpha", "rep is not alternating"));
  } else if (!odd) {
    report.checks.push_back(skipped(g_claim, "class-number-g-alpha", "requires an odd prime"));
  } else {
    IdentityCheck c;
    c.claim = g_claim;
    c.law = "class-number-g-alpha";
    c.expected = Rational(w_size) * ask_value(scalar_multiply(rep, 2), ring);
    fill_counts(c, FiniteGroup(GroupKind::g_alpha, rep, ring, budget), budget);
    report.checks.push_back(c);
  }

  {
    IdentityCheck c;
    c.claim = "k(H_theta) = |W| * ask(hull(theta))";
    c.law = "class-number-h-theta";
    c.expected = Rational(w_size) * ask_value(alternating_hull(rep), ring);
    fill_counts(c, FiniteGroup(GroupKind::h_theta, rep, ring, budget), budget);
    report.checks.push_back(c);
  }

  const std::string l_claim = "k(exp(g_{2 alpha})) = ask(ad g_{2 alpha})";
  if (!alternating) {
    report.checks.push_back(skipped(l_claim, "class-number-lazard", "rep is not alternating"));
  } else if (!odd) {
    report.checks.push_back(skipped(l_claim, "class-number-lazard", "requires an odd prime"));
  } else {
    IdentityCheck c = verify_lie_identity(lie_tensor_of(rep, 2), ring, budget);
    c.claim = l_claim;
    report.checks.push_back(c);
  }
  return report;
}

IdentityCheck verify_lie_identity(const MRep& lie, const TruncatedRing& ring,
                                  const GroupBudget& budget) {
  IdentityCheck c;
  c.claim = "k(exp L) = ask(ad L)";
  c.law = "class-number-lazard";
  c.expected = ask_value(adjoint_rep(lie), ring);
  fill_counts(c, FiniteGroup(GroupKind::lazard, lie, ring, budget), budget);
  return c;
}

}  // namespace askzeta
