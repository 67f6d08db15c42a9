#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace latcross {

using Int = boost::multiprecision::cpp_int;

// Bivariate polynomial in t and q with arbitrary-precision integer
// coefficients. Invariants: every stored coefficient is nonzero, every
// exponent is nonnegative, and terms iterate in ascending (t_exp, q_exp)
// order. The zero polynomial has no terms.
class QTPoly {
 public:
  using Key = std::pair<int, int>;  // (t_exp, q_exp)
  using TermMap = std::map<Key, Int>;

  QTPoly() = default;

  static QTPoly constant(Int c);
  // Throws std::invalid_argument on a negative exponent.
  static QTPoly monomial(Int c, int t_exp, int q_exp);

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Int coeff(int t_exp, int q_exp) const;

  // Adds c * t^t_exp * q^q_exp, erasing the term if it cancels to zero.
  void add_term(const Int& c, int t_exp, int q_exp);

  QTPoly& operator+=(const QTPoly& o);
  QTPoly& operator-=(const QTPoly& o);
  QTPoly& operator*=(const QTPoly& o);
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  bool operator==(const QTPoly& o) const { return terms_ == o.terms_; }

  // Shifts every term by t^dt * q^dq; the result must stay exponent-nonnegative.
  QTPoly shifted(int dt, int dq) const;

  Int value_at_one() const;                  // evaluation at t = q = 1
  std::map<int, Int> t_profile_at_q1() const;  // t_exp -> sum of coefficients

  // Canonical text form: terms joined by " + " in ascending order, each
  // rendered c*t^i*q^j with unit coefficients and exponents elided. Zero
  // renders as "0".
  std::string to_text() const;
  // Expanded monomial string for typesetting, e.g. "1 + tq^{2} + 2t^{2}q^{3}".
  std::string to_latex() const;

 private:
  TermMap terms_;
};

// Gaussian binomial coefficient in q: zero unless 0 <= n <= m.
QTPoly qbinom(int m, int n);

// Exact division by 1 - q^a (a >= 1); throws Error(non_divisible) when the
// quotient is not a polynomial.
QTPoly exact_div_one_minus_q_pow(const QTPoly& p, int a);

// 1 - q^a as a polynomial (a >= 1).
QTPoly one_minus_q_pow(int a);

}  // namespace latcross
