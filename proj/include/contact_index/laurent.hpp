#pragma once

#include <map>
#include <string>

#include "contact_index/rational.hpp"

namespace contact_index {

/// Σ c_e h^e over finitely many integer exponents e, rational coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const Rational& c);  // NOLINT: constants embed implicitly
  static LaurentPolynomial monomial(long exponent, const Rational& c = 1);

  const std::map<long, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(long e) const;
  Rational evaluate_at_one() const;
  std::string to_text() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(LaurentPolynomial a, const LaurentPolynomial& b) { return a *= b; }
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void add_term(long e, const Rational& c);
  std::map<long, Rational> terms_;
};

/// num/den when it is a Laurent polynomial; DomainError if the division leaves a remainder.
LaurentPolynomial divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den);

}  // namespace contact_index
