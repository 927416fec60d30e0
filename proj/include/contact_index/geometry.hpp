#pragma once

#include <map>
#include <vector>

#include "contact_index/form_algebra.hpp"

namespace contact_index {

/// One connected component of the fixed set of a torus element.
///
/// Tangential roots describe E(g), possibly stabilized by one trivial line
/// (weight 0 on the Reeb direction), so their count is k or k+1; the normal
/// roots describe N(g) and number n - k. The moment pairing on the component
/// is the constant μ·⟨w_R, X⟩.
struct FixedComponentData {
  int dim_odd = 1;
  std::vector<ChernRoot> tangential_roots;
  std::vector<ChernRoot> normal_roots;
  Rational mu = 1;
  std::vector<long> reeb_weight;
  Pairing pairing;

  int k() const noexcept { return (dim_odd - 1) / 2; }
  friend bool operator==(const FixedComponentData&, const FixedComponentData&) = default;
};

struct ContactModel {
  int rank = 1;
  int ambient_n = 0;
  int generators = 1;
  /// Sorted by torsion order, then angles.
  std::vector<TorsionPoint> torsion_support;
  std::map<TorsionPoint, std::vector<FixedComponentData>> components;
  /// Rank 2 only: fixed components of a generic element of the first torus factor.
  std::vector<FixedComponentData> generic_components;

  friend bool operator==(const ContactModel&, const ContactModel&) = default;
};

TorsionPoint identity_point(int rank);
void sort_support(std::vector<TorsionPoint>& support);

ContactModel preset_circle();
ContactModel preset_hopf_sphere(int n);
ContactModel preset_weighted_s3(long a, long b);
ContactModel preset_prequantum_cpn(int n);

/// The model restricted to the fixed set of g0; empty when g0 fixes nothing.
ContactModel fixed_submodel(const ContactModel& model, const TorsionPoint& g0);
/// Rank-2 model seen by the second (principal) circle alone.
ContactModel principal_projection(const ContactModel& model);
/// Replaces α by λα: μ ↦ λμ, dα-curvature ↦ curvature/λ, pairing ↦ λ^{J₀+1}·pairing.
ContactModel scale_contact_form(const ContactModel& model, const Rational& lambda);

/// Throws ValidationError naming the offending field path.
void validate_model(const ContactModel& model);

FormSpace form_space(const ContactModel& model, const FixedComponentData& c);

}  // namespace contact_index
