#include "askzeta/polynom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "askzeta/detail/odometer.hpp"

namespace askzeta {

MultiPoly MultiPoly::constant(std::size_t nvars, const BigInt& value) {
  MultiPoly f(nvars);
  f.add_term(Exponents(nvars, 0), value);
  return f;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) {
    throw std::invalid_argument("variable index out of range");
  }
  Exponents exps(nvars, 0);
  exps[index] = 1;
  MultiPoly f(nvars);
  f.add_term(exps, 1);
  return f;
}

void MultiPoly::add_term(const Exponents& exps, const BigInt& coeff) {
  if (exps.size() != nvars_) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [exps, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : exps) s += x;
    deg = std::max(deg, static_cast<int>(s));
  }
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  int deg = -1;
  for (const auto& [exps, c] : terms_) {
    unsigned s = 0;
    for (unsigned x : exps) s += x;
    if (deg >= 0 && static_cast<int>(s) != deg) return false;
    deg = static_cast<int>(s);
  }
  return true;
}

std::optional<BigInt> MultiPoly::constant_value() const {
  if (terms_.empty()) return BigInt(0);
  if (terms_.size() == 1) {
    const auto& [exps, c] = *terms_.begin();
    if (std::all_of(exps.begin(), exps.end(), [](unsigned x) { return x == 0; })) return c;
  }
  return std::nullopt;
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (nvars_ != other.nvars_) {
    throw std::invalid_argument("polynomials live in different variable counts");
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [exps, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [exps, c] : other.terms_) add_term(exps, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  MultiPoly::Exponents exps(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < exps.size(); ++k) exps[k] = ea[k] + eb[k];
      out.add_term(exps, ca * cb);
    }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exps, c] = *it;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (has_var) mono << "*";
      mono << "z" << (k + 1);
      if (exps[k] > 1) mono << "^" << exps[k];
      has_var = true;
    }
    if (!has_var) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono.str();
    }
  }
  return os.str();
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) {
    throw std::domain_error("division by the zero polynomial");
  }
  if (auto c = b.constant_value()) {
    MultiPoly q(a.nvars());
    for (const auto& [exps, coeff] : a.terms()) {
      if (coeff % *c != 0) throw std::domain_error("inexact polynomial division");
      q.add_term(exps, coeff / *c);
    }
    return q;
  }
  // Division by lex-leading terms; the map's last key is the lex-largest monomial.
  MultiPoly rem = a;
  MultiPoly quot(a.nvars());
  const auto& [lead_b, lead_c] = *b.terms().rbegin();
  while (!rem.is_zero()) {
    const auto& [lead_r, lead_rc] = *rem.terms().rbegin();
    MultiPoly::Exponents shift(a.nvars());
    for (std::size_t k = 0; k < shift.size(); ++k) {
      if (lead_r[k] < lead_b[k]) throw std::domain_error("inexact polynomial division");
      shift[k] = lead_r[k] - lead_b[k];
    }
    if (lead_rc % lead_c != 0) throw std::domain_error("inexact polynomial division");
    MultiPoly term(a.nvars());
    term.add_term(shift, lead_rc / lead_c);
    quot += term;
    rem -= term * b;
  }
  return quot;
}

BigInt eval(const MultiPoly& f, std::span<const BigInt> point) {
  if (point.size() != f.nvars()) {
    throw std::invalid_argument("eval: point length " + std::to_string(point.size()) +
                                " does not match " + std::to_string(f.nvars()) + " variables");
  }
  BigInt total = 0;
  for (const auto& [exps, c] : f.terms()) {
    BigInt t = c;
    for (std::size_t k = 0; k < exps.size(); ++k)
      if (exps[k] != 0) t *= big_pow(point[k], exps[k]);
    total += t;
  }
  return total;
}

std::int64_t eval(const MultiPoly& f, std::span<const std::int64_t> point,
                  const TruncatedRing& modulus) {
  if (point.size() != f.nvars()) {
    throw std::invalid_argument("eval: point length " + std::to_string(point.size()) +
                                " does not match " + std::to_string(f.nvars()) + " variables");
  }
  std::int64_t total = 0;
  for (const auto& [exps, c] : f.terms()) {
    std::int64_t t = modulus.reduce(c);
    for (std::size_t k = 0; k < exps.size(); ++k) {
      const std::int64_t x = modulus.reduce(point[k]);
      for (unsigned r = 0; r < exps[k]; ++r) t = modulus.mul(t, x);
    }
    total = modulus.add(total, t);
  }
  return total;
}

MultiPoly partial(const MultiPoly& f, std::size_t index) {
  if (index >= f.nvars()) {
    throw std::invalid_argument("partial: variable index out of range");
  }
  MultiPoly out(f.nvars());
  for (const auto& [exps, c] : f.terms()) {
    if (exps[index] == 0) continue;
    MultiPoly::Exponents lowered = exps;
    --lowered[index];
    out.add_term(lowered, c * exps[index]);
  }
  return out;
}

namespace {

bool is_zero_entry(const MultiPoly& f) { return f.is_zero(); }
bool is_zero_entry(const BigInt& x) { return x == 0; }

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) { return exact_divide(a, b); }
BigInt divide_exact(const BigInt& a, const BigInt& b) {
  if (a % b != 0) throw std::domain_error("inexact integer division in elimination");
  return a / b;
}

// Fraction-free row echelon form. Entries after step k are (k+1)-minors of the
// input, so each division by the previous pivot is exact. Returns the rank;
// sign collects row swaps. Pivot: lowest-index column, then lowest row.
template <class T>
int bareiss(std::vector<T>& m, std::size_t rows, std::size_t cols, const T& one, int& sign,
            T& last_pivot) {
  sign = 1;
  T prev = one;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero_entry(m[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
      sign = -sign;
    }
    const T pivot = m[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        T num = pivot * m[i * cols + j] - m[i * cols + c] * m[r * cols + j];
        m[i * cols + j] = divide_exact(num, prev);
      }
      m[i * cols + c] = T(one) - one;  // zero of the right kind
    }
    prev = pivot;
    ++r;
  }
  last_pivot = prev;
  return static_cast<int>(r);
}

}  // namespace

std::vector<MultiPoly> linear_matrix(const MRep& rep) {
  const auto [l, d, e] = rep.shape();
  std::vector<MultiPoly> m(d * e, MultiPoly(l));
  for (std::size_t h = 0; h < l; ++h) {
    MultiPoly::Exponents exps(l, 0);
    exps[h] = 1;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < e; ++j) m[i * e + j].add_term(exps, rep.at(h, i, j));
  }
  return m;
}

MultiPoly det_linear_matrix(const MRep& rep) {
  if (rep.d() != rep.e()) {
    throw std::invalid_argument("det_linear_matrix: matrix of linear forms is not square");
  }
  const std::size_t n = rep.d();
  if (n == 0) return MultiPoly::constant(rep.l(), 1);
  auto m = linear_matrix(rep);
  int sign = 1;
  MultiPoly last(rep.l());
  const int rank = bareiss(m, n, n, MultiPoly::constant(rep.l(), 1), sign, last);
  if (rank < static_cast<int>(n)) return MultiPoly(rep.l());
  return sign > 0 ? last : -last;
}

int generic_rank(const MRep& rep) {
  auto m = linear_matrix(rep);
  int sign = 1;
  MultiPoly last(rep.l());
  return bareiss(m, rep.d(), rep.e(), MultiPoly::constant(rep.l(), 1), sign, last);
}

int integer_rank(std::vector<BigInt> entries, std::size_t rows, std::size_t cols) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("integer_rank: entry count does not match shape");
  }
  int sign = 1;
  BigInt last = 1;
  return bareiss(entries, rows, cols, BigInt(1), sign, last);
}

HypersurfaceCount count_hypersurface_points(const MultiPoly& f, const TruncatedRing& field) {
  if (field.level() != 1) {
    throw std::invalid_argument("count_hypersurface_points: requires a prime field (n = 1)");
  }
  if (!f.is_homogeneous()) {
    throw std::invalid_argument("count_hypersurface_points: polynomial is not homogeneous");
  }
  std::vector<MultiPoly> partials;
  for (std::size_t k = 0; k < f.nvars(); ++k) partials.push_back(partial(f, k));

  HypersurfaceCount result{0, true};
  BigInt affine = 0;
  detail::Odometer odo(f.nvars(), field.prime());
  while (odo.advance() >= 0) {  // skips the zero vector
    const auto& x = odo.digits();
    if (eval(f, x, field) != 0) continue;
    ++affine;
    if (std::all_of(partials.begin(), partials.end(),
                    [&](const MultiPoly& g) { return eval(g, x, field) == 0; })) {
      result.smooth = false;
    }
  }
  result.points = affine / (field.prime() - 1);
  return result;
}

}  // namespace askzeta
