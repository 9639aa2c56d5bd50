#include "askzeta/zeta_forms.hpp"

#include <sstream>
#include <stdexcept>

namespace askzeta {

namespace {
// Integers without the "/1" used by the serialized form.
std::string display(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return to_fraction_string(r);
}
}  // namespace

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::one_minus(const Rational& c) { return QPolynomial({Rational(1), -c}); }

void QPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPolynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QPolynomial QPolynomial::scaled_variable(const Rational& c) const {
  std::vector<Rational> out(coeffs_);
  Rational power = 1;
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return QPolynomial(std::move(out));
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) + b.coeff(k);
  return QPolynomial(std::move(out));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coeff(k) - b.coeff(k);
  return QPolynomial(std::move(out));
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return QPolynomial();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (k == 0 || mag != 1) os << display(mag);
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RationalFunction::RationalFunction(QPolynomial numerator, QPolynomial denominator,
                                   Rational q_value)
    : num(std::move(numerator)), den(std::move(denominator)), q(std::move(q_value)) {
  if (den.coeff(0) == 0) {
    throw std::invalid_argument("rational function: denominator vanishes at T = 0");
  }
}

std::vector<Rational> RationalFunction::expand(std::size_t order) const {
  const Rational d0 = den.coeff(0);
  if (d0 == 0) {
    throw std::invalid_argument("expand: denominator vanishes at T = 0");
  }
  std::vector<Rational> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Rational acc = num.coeff(k);
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(den.degree()));
    for (std::size_t i = 1; i <= top; ++i) acc -= den.coeff(i) * out[k - i];
    out[k] = acc / d0;
  }
  return out;
}

RationalFunction RationalFunction::shift(long long k) const {
  const Rational factor = rational_pow(q, k);
  return RationalFunction(num.scaled_variable(factor), den.scaled_variable(factor), q);
}

namespace {
void require_same_q(const RationalFunction& a, const RationalFunction& b) {
  if (a.q != b.q) {
    throw std::invalid_argument("rational functions use different values of q");
  }
}
}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_q(a, b);
  return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den, a.q);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_q(a, b);
  return RationalFunction(a.num * b.num, a.den * b.den, a.q);
}

std::string RationalFunction::to_string(const std::string& var) const {
  return "(" + num.to_string(var) + ") / (" + den.to_string(var) + ")";
}

bool equal_as_functions(const RationalFunction& a, const RationalFunction& b) {
  return a.q == b.q && a.num * b.den == b.num * a.den;
}

namespace {

long long binom2(long long n) { return n * (n - 1) / 2; }

void require(bool ok, const std::string& name, const std::string& what) {
  if (!ok) throw std::invalid_argument("closed form '" + name + "': " + what);
}

}  // namespace

RationalFunction closed_form(const std::string& name, const FormParams& p, const Rational& q) {
  require(q != 0, name, "q must be nonzero");
  auto Q = [&](long long k) { return rational_pow(q, k); };
  auto one = QPolynomial::constant(1);
  auto f = [&](long long k) { return QPolynomial::one_minus(Q(k)); };  // 1 - q^k T

  if (name == "kmin") {
    require(p.l >= 1 && p.d >= 1 && p.m >= 1, name, "needs l, d, m >= 1");
    require(p.r >= 0 && p.r <= p.d, name, "needs 0 <= r <= d");
    return RationalFunction(f((p.d - p.r) * p.m - p.l), f(p.d * p.m - p.l) * f((p.d - p.r) * p.m),
                            q);
  }
  if (name == "matdxe") {
    require(p.d >= 1 && p.e >= 1, name, "needs d, e >= 1");
    return RationalFunction(f(-p.e), f(0) * f(p.d - p.e), q);
  }
  if (name == "band") {
    require(p.r >= 1, name, "needs r >= 1");
    return RationalFunction(f(-1), f(p.r - 1) * f(p.r - 1), q);
  }
  if (name == "hankel") {
    require(p.r >= 1, name, "needs r >= 1");
    return RationalFunction(f(-p.r), f(0) * f(0), q);
  }
  if (name == "westwick") {
    require(p.r >= 1, name, "needs r >= 1");
    return RationalFunction(f(-2), f(2 * (p.r - 1)) * f(1), q);
  }
  if (name == "ask2_matd") {
    require(p.d >= 1, name, "needs d >= 1");
    const QPolynomial t({Rational(0), Rational(1)});
    const Rational c = (1 - Q(-p.d)) * (1 - Q(1 - p.d));
    return RationalFunction(f(-p.d) * f(1 - p.d) + t * QPolynomial::constant(c),
                            f(0) * f(0) * f(1), q);
  }
  if (name == "gamma_m") {
    require(p.d >= 1 && p.m >= 1, name, "needs d, m >= 1");
    QPolynomial num = one, den = f(p.m * binom2(p.d + 1) - p.d);
    for (long long j = 0; j < p.d; ++j) {
      const long long base = p.m * binom2(p.d) + (p.m - 1) * j;
      num = num * f(base - 1);
      den = den * f(base);
    }
    return RationalFunction(num, den, q);
  }
  if (name == "cc_H_gamma") {
    require(p.d >= 1, name, "needs d >= 1");
    const long long b = binom2(p.d + 1);
    return RationalFunction(f(b - 1), f(b + p.d) * f(b + p.d - 1), q);
  }
  if (name == "type_F_cc") {
    require(p.d >= 1, name, "needs d >= 1");
    return RationalFunction(f(binom2(p.d - 1)), f(binom2(p.d)) * f(binom2(p.d) + 1), q);
  }
  if (name == "determinantal") {
    require(p.l >= 1 && p.d >= 1 && p.m >= 1, name, "needs l, d, m >= 1");
    require(p.h_count >= 0, name, "needs h_count >= 0");
    RationalFunction first(f(-p.l), f(0) * f(p.d * p.m - p.l), q);
    const Rational coeff = Rational(p.h_count) * (q - 1) * Q(p.m - p.l) * (1 - Q(-p.m));
    RationalFunction second(QPolynomial({Rational(0), coeff}),
                            f(0) * f(p.m - 1) * f(p.d * p.m - p.l), q);
    return first + second;
  }
  if (name == "zero") {
    require(p.d >= 0 && p.m >= 1, name, "needs d >= 0, m >= 1");
    return RationalFunction(one, f(p.d * p.m), q);
  }
  throw std::invalid_argument("unknown closed form '" + name + "'");
}

std::vector<std::string> closed_form_names() {
  return {"kmin",       "matdxe",     "band",      "hankel",        "westwick", "ask2_matd",
          "gamma_m",    "cc_H_gamma", "type_F_cc", "determinantal", "zero"};
}

}  // namespace askzeta
