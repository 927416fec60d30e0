#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "contact_index/cyclotomic.hpp"

namespace contact_index {

/// Σ_k c_k π^k with cyclotomic c_k: a graded ring in which π is a formal symbol.
///
/// Only nonzero terms are stored. A scalar is invertible iff it has exactly one
/// π-term (whose cyclotomic part is then automatically nonzero).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& r) : ExactScalar(CyclotomicNumber(r)) {}  // NOLINT
  ExactScalar(long n) : ExactScalar(Rational(n)) {}                      // NOLINT
  ExactScalar(int n) : ExactScalar(Rational(n)) {}                       // NOLINT
  ExactScalar(const CyclotomicNumber& c, int pi_power = 0);              // NOLINT

  static ExactScalar pi(int power = 1);
  static ExactScalar i();
  static ExactScalar root_of_unity(const Rational& angle);
  /// (2πi)^k for any integer k.
  static ExactScalar two_pi_i(int k);

  const std::map<int, CyclotomicNumber>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_invertible() const noexcept { return terms_.size() == 1; }

  ExactScalar inverse() const;
  ExactScalar conj() const;

  /// Some(r) iff the value is the rational r (no π, no roots of unity).
  std::optional<Rational> as_rational() const;
  std::complex<long double> to_complex() const;

  /// "(<rational>·ζ_L^e)·π^k" terms joined by " + " at minimal levels; "0" for zero.
  std::string to_text() const;
  static ExactScalar parse(std::string_view text);
  /// Decimal rendering for reports; never parsed back.
  std::string approx(int digits = 3) const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.terms_ == b.terms_; }

 private:
  std::map<int, CyclotomicNumber> terms_;
};

ExactScalar pow(const ExactScalar& base, int exponent);

}  // namespace contact_index
