#pragma once

#include <string>
#include <vector>

#include "askzeta/rational.hpp"

namespace askzeta {

/// Polynomial in one variable T with exact rational coefficients.
/// coeffs()[k] is the coefficient of T^k; trailing zeros are stripped.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  static QPolynomial constant(const Rational& c);
  /// 1 - c T
  static QPolynomial one_minus(const Rational& c);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  Rational operator()(const Rational& t) const;

  /// f(T) -> f(c T).
  QPolynomial scaled_variable(const Rational& c) const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  bool operator==(const QPolynomial&) const = default;

  std::string to_string(const std::string& var = "T") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

/// num(T) / den(T) for a fixed numeric q. den(0) != 0 is required so that the
/// function has a power series at T = 0.
struct RationalFunction {
  QPolynomial num;
  QPolynomial den;
  Rational q;

  RationalFunction() = default;
  RationalFunction(QPolynomial numerator, QPolynomial denominator, Rational q_value);

  /// Coefficients of T^0 .. T^order.
  std::vector<Rational> expand(std::size_t order) const;

  /// T -> q^k T; on the Dirichlet side (T = q^{-s}) this is s -> s - k.
  RationalFunction shift(long long k) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

  std::string to_string(const std::string& var = "T") const;
};

/// Equality of rational functions by cross-multiplication (q must agree).
bool equal_as_functions(const RationalFunction& a, const RationalFunction& b);

/// Integer parameters of the closed forms; unused fields are ignored.
struct FormParams {
  long long l = 1;
  long long d = 1;
  long long e = 1;
  long long r = 1;
  long long m = 1;
  BigInt h_count = 0;  // number of F_q-points of a projective hypersurface
};

/// Closed-form generating functions by name:
///   kmin(l, d, r, m), matdxe(d, e), band(r), hankel(r), westwick(r),
///   ask2_matd(d), gamma_m(d, m), cc_H_gamma(d), type_F_cc(d),
///   determinantal(l, d, m, h_count), zero(d, m).
/// The cc forms use t = q^{-s}. Throws std::invalid_argument for unknown
/// names or out-of-range parameters.
RationalFunction closed_form(const std::string& name, const FormParams& params, const Rational& q);

std::vector<std::string> closed_form_names();

}  // namespace askzeta
