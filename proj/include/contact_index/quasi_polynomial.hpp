#pragma once

#include <map>
#include <vector>

#include "contact_index/exact_scalar.hpp"

namespace contact_index {

/// m ↦ polys[m mod period](m), a polynomial on each residue class.
class QuasiPolynomial {
 public:
  /// Coefficients lowest degree first.
  using Poly = std::vector<ExactScalar>;

  explicit QuasiPolynomial(int period = 1);
  QuasiPolynomial(int period, std::vector<Poly> polys);

  int period() const noexcept { return period_; }
  const std::vector<Poly>& polys() const noexcept { return polys_; }
  bool is_zero() const;

  ExactScalar evaluate(long m) const;
  /// Same values on the smallest period that describes them.
  QuasiPolynomial canonical() const;
  /// Same values re-expressed at a multiple of the period.
  QuasiPolynomial lift(int period) const;

  QuasiPolynomial& operator+=(const QuasiPolynomial& o);
  friend QuasiPolynomial operator+(QuasiPolynomial a, const QuasiPolynomial& b) { return a += b; }
  /// Value equality.
  friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b);

 private:
  int period_;
  std::vector<Poly> polys_;
};

ExactScalar evaluate_poly(const QuasiPolynomial::Poly& p, const Rational& x);

/// Exact interpolation per residue class from the first max_degree+1 samples
/// of each class; every remaining sample is held out and must agree.
/// Throws FitError listing the residuals otherwise.
QuasiPolynomial fit_quasi_polynomial(const std::map<long, ExactScalar>& samples, int period, int max_degree);

}  // namespace contact_index
