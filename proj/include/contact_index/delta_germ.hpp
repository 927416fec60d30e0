#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "contact_index/quasi_polynomial.hpp"
#include "contact_index/smooth_jet.hpp"

namespace contact_index {

/// Angles θ of a torus element e^{2πiθ}, one per torus factor, each in [0,1).
using TorsionPoint = std::vector<Rational>;

TorsionPoint make_torsion_point(std::vector<Rational> angles);
/// "p/q" per factor, comma separated.
TorsionPoint parse_torsion_point(std::string_view text);
std::string torsion_point_text(const TorsionPoint& t);
/// Exponent of the torus element (lcm of denominators).
long torsion_order(const TorsionPoint& t);

/// Σ_j c_j δ₀^{(j)} in one or two local variables, located at a torsion point.
class DeltaGerm {
 public:
  explicit DeltaGerm(int vars = 1, TorsionPoint location = {});

  static DeltaGerm delta(int vars, const MultiIndex& order, const ExactScalar& c, TorsionPoint location = {});

  int vars() const noexcept { return vars_; }
  const TorsionPoint& location() const noexcept { return location_; }
  const std::map<MultiIndex, ExactScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ExactScalar coefficient(const MultiIndex& order) const;
  /// Largest total derivative order; -1 for the zero germ.
  int max_order() const;
  DeltaGerm at(TorsionPoint location) const;

  DeltaGerm operator-() const;
  DeltaGerm& operator+=(const DeltaGerm& o);
  DeltaGerm& operator-=(const DeltaGerm& o);
  DeltaGerm& operator*=(const ExactScalar& c);

  friend DeltaGerm operator+(DeltaGerm a, const DeltaGerm& b) { return a += b; }
  friend DeltaGerm operator-(DeltaGerm a, const DeltaGerm& b) { return a -= b; }
  friend DeltaGerm operator*(DeltaGerm a, const ExactScalar& c) { return a *= c; }
  friend DeltaGerm operator*(const ExactScalar& c, DeltaGerm a) { return a *= c; }
  friend bool operator==(const DeltaGerm&, const DeltaGerm&) = default;

  std::string to_text() const;
  nlohmann::json to_json() const;
  static DeltaGerm from_json(const nlohmann::json& doc);

 private:
  void check_compatible(const DeltaGerm& o) const;
  void add_term(const MultiIndex& k, const ExactScalar& c);

  int vars_;
  TorsionPoint location_;
  std::map<MultiIndex, ExactScalar> terms_;
};

/// The germ g(a·x_var): δ^{(j)}(ax) = sign(a)·a^{-(j+1)}·δ^{(j)}(x) in that variable.
DeltaGerm scale_variable(const DeltaGerm& g, const Rational& a, int var = 0);
/// s·g via x^k·δ^{(j)} = (-1)^k j!/(j-k)! δ^{(j-k)} (zero for k > j), per variable.
DeltaGerm multiply_smooth(const DeltaGerm& g, const SmoothJet& s);
/// One-variable germs g(x)·h(y) as a two-variable germ.
DeltaGerm tensor(const DeltaGerm& g, const DeltaGerm& h);
/// j-th derivative of a one-variable germ.
DeltaGerm differentiate(const DeltaGerm& g, int j);

/// ⟨w, X⟩ + c in the local variables.
struct AffineForm {
  std::vector<Rational> w;
  Rational c = 0;
};

/// The germ at 0 of u(A(x)) for a one-variable u and a one-variable affine A.
/// Zero when A(0) ≠ 0; EllipticityError when A vanishes identically.
DeltaGerm pullback_affine(const DeltaGerm& u, const AffineForm& a);

/// Fourier coefficients of a one-variable germ at a torsion point ζ:
/// c_m = ζ^{-s·m}·(1/2π)·Σ_j c_j (s·i·m)^j, a quasi-polynomial of period ord(ζ).
QuasiPolynomial fourier_contribution(const DeltaGerm& g, int poisson_sign);
/// ⟨Σ c_j δ^{(j)}, Σ a_m e^{imφ}⟩ = Σ_j c_j (-1)^j Σ_m a_m (im)^j.
ExactScalar pair_with_trig(const DeltaGerm& g, const std::map<long, ExactScalar>& trig);

}  // namespace contact_index
