#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "contact_index/delta_germ.hpp"
#include "contact_index/power_series.hpp"
#include "contact_index/smooth_jet.hpp"

namespace contact_index {

/// Even 2-form generators (generator 0 is dα), the top generator degree k of a
/// (2k+1)-dimensional component, and the jet space of the coefficients.
struct FormSpace {
  int generators = 1;
  int top_degree = 0;
  JetSpace jet;
  friend bool operator==(const FormSpace&, const FormSpace&) = default;
};

/// Monomial α^{0|1}·∏ gen_g^{exps[g]}.
struct FormKey {
  bool alpha = false;
  std::vector<int> exps;
  friend auto operator<=>(const FormKey&, const FormKey&) = default;
};

/// smooth + Σ_j jet_j·δ^{(j)}: a smooth jet plus jet-weighted delta derivatives.
class GeneralizedCoefficient {
 public:
  explicit GeneralizedCoefficient(JetSpace space);
  static GeneralizedCoefficient smooth(const SmoothJet& s);
  static GeneralizedCoefficient delta(const MultiIndex& order, const SmoothJet& weight);

  const SmoothJet& smooth_part() const noexcept { return smooth_; }
  const std::map<MultiIndex, SmoothJet>& delta_part() const noexcept { return deltas_; }
  bool is_zero() const noexcept { return smooth_.is_zero() && deltas_.empty(); }
  /// Evaluates the delta part into a germ; the smooth part must vanish.
  DeltaGerm to_germ() const;
  std::string to_text() const;

  GeneralizedCoefficient& operator+=(const GeneralizedCoefficient& o);
  /// δ·δ products are rejected: they never arise in the index integrand.
  GeneralizedCoefficient& operator*=(const GeneralizedCoefficient& o);
  GeneralizedCoefficient& operator*=(const ExactScalar& c);
  friend GeneralizedCoefficient operator*(GeneralizedCoefficient a, const GeneralizedCoefficient& b) {
    return a *= b;
  }
  friend bool operator==(const GeneralizedCoefficient&, const GeneralizedCoefficient&) = default;

 private:
  SmoothJet smooth_;
  std::map<MultiIndex, SmoothJet> deltas_;
};

/// Truncated polynomial in commuting even generators with at most one α factor.
class FormElement {
 public:
  explicit FormElement(FormSpace space);

  static FormElement one(FormSpace space);
  static FormElement scalar(FormSpace space, const ExactScalar& c);
  static FormElement jet(FormSpace space, const SmoothJet& s);
  static FormElement generator(FormSpace space, int g);
  static FormElement alpha(FormSpace space);
  static FormElement term(FormSpace space, FormKey key, GeneralizedCoefficient c);

  const FormSpace& space() const noexcept { return space_; }
  const std::map<FormKey, GeneralizedCoefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Sorted term list, one per line.
  std::string dump() const;

  FormElement& operator+=(const FormElement& o);
  FormElement& operator-=(const FormElement& o);
  FormElement& operator*=(const FormElement& o);
  FormElement& operator*=(const ExactScalar& c);
  friend FormElement operator+(FormElement a, const FormElement& b) { return a += b; }
  friend FormElement operator-(FormElement a, const FormElement& b) { return a -= b; }
  friend FormElement operator*(FormElement a, const FormElement& b) { return a *= b; }
  friend FormElement operator*(FormElement a, const ExactScalar& c) { return a *= c; }
  friend bool operator==(const FormElement&, const FormElement&) = default;

 private:
  void check_space(const FormElement& o) const;
  void add_term(const FormKey& key, const GeneralizedCoefficient& c);

  FormSpace space_;
  std::map<FormKey, GeneralizedCoefficient> terms_;
};

FormElement multiply(const FormElement& a, const FormElement& b);
/// Σ_n coeffs[n]·x^n; x must have no constant part for the sum to be exact.
FormElement apply_series(const std::vector<Rational>& coeffs, const FormElement& x);
/// Largest power of an element without constant part that can survive truncation.
int nilpotency_bound(const FormSpace& space);

/// A line of a split bundle: curvature (coefficients on the generators), torus
/// weight, and the angle θ of the eigenvalue e^{2πiθ} of the group element.
struct ChernRoot {
  std::vector<ExactScalar> curvature;
  std::vector<long> weight;
  Rational eig = 0;
  friend bool operator==(const ChernRoot&, const ChernRoot&) = default;
};

/// curvature + i⟨w, X⟩.
FormElement equivariant_value(const ChernRoot& root, const FormSpace& space);
/// ∏ todd(value) over tangential roots.
FormElement todd(const std::vector<ChernRoot>& roots, const FormSpace& space, ToddDirection direction);
/// ∏ (1 − conj(λ)·e^{−value})^{-1}: the inverse determinant of 1 − g e^{F} on the
/// conjugate normal lines, expanded around the constant ∏ (1 − conj(λ))^{-1}.
FormElement dC_inverse(const std::vector<ChernRoot>& roots, const FormSpace& space);
/// Σ_{j ≤ maxdeg} u^{(j)}(A(X))·ν^j/j! with ν nilpotent.
FormElement pullback_affine_nilpotent(const DeltaGerm& u, const AffineForm& a, const FormElement& nu, int maxdeg);
/// α ∧ δ₀(dα − μ⟨w_R, X⟩) expanded in powers of dα.
FormElement j_form(const Rational& mu, const std::vector<long>& reeb_weight, const FormSpace& space);

/// Values of ∫ α∧(generator monomial), keyed by exponent vectors of total degree k.
using Pairing = std::map<std::vector<int>, ExactScalar>;

/// Σ over α-terms of top degree of pairing[J]·coefficient_J, as a germ at 0.
DeltaGerm integrate_component(const FormElement& f, const Pairing& pairing);

}  // namespace contact_index
