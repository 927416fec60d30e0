#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "contact_index/rational.hpp"

namespace contact_index {

int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int n);

/// Element of Q(ζ_L) in the power basis 1, ζ_L, ..., ζ_L^{φ(L)-1}.
///
/// The level L is always a multiple of 4 so that i = ζ_L^{L/4} is representable.
/// Coefficients are kept reduced modulo the L-th cyclotomic polynomial with
/// trailing zeros trimmed; zero has no coefficients. Binary operations work at
/// lcm of the operand levels. Equality compares values, not representations,
/// so a number and its promotion compare equal.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(const Rational& r);  // NOLINT: rationals embed implicitly
  CyclotomicNumber(long n) : CyclotomicNumber(Rational(n)) {}  // NOLINT

  /// ζ_L^e.
  static CyclotomicNumber zeta(int level, long exponent);
  /// e^{2πi·angle} for a rational angle.
  static CyclotomicNumber root_of_unity(const Rational& angle);
  static CyclotomicNumber i();
  /// From raw power-basis coefficients at `level` (reduced on construction).
  static CyclotomicNumber from_coefficients(int level, std::vector<Rational> coeffs);

  int level() const noexcept { return level_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Re-express at a level divisible by the current one.
  CyclotomicNumber promote(int target_level) const;
  /// The same value at the smallest admissible level.
  CyclotomicNumber demote() const;

  CyclotomicNumber conj() const;
  /// Throws DomainError on zero.
  CyclotomicNumber inverse() const;

  std::optional<Rational> as_rational() const;
  std::complex<long double> to_complex() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  int level_ = 4;
  std::vector<Rational> coeffs_;
};

}  // namespace contact_index
