#pragma once

#include <map>
#include <utility>
#include <vector>

#include "contact_index/geometry.hpp"
#include "contact_index/laurent.hpp"
#include "contact_index/power_series.hpp"
#include "contact_index/quasi_polynomial.hpp"

namespace contact_index {

/// The three sign conventions fixed by calibration.
struct Conventions {
  int poisson_sign = 1;
  int orientation_sign = 1;
  ToddDirection todd = ToddDirection::OneMinusExpNeg;
  friend bool operator==(const Conventions&, const Conventions&) = default;
};

/// (2πi)^{-k}·σ·∫ integrand over one component, as a germ at 0.
DeltaGerm component_germ(const ContactModel& model, const FixedComponentData& c, const Conventions& conv,
                         bool with_todd = true);

/// Σ over the fixed components of g0 of (2πi)^{-k}∫ Td·𝒥/D_C; zero off the torsion support.
DeltaGerm germ_at(const ContactModel& model, const TorsionPoint& g0, const Conventions& conv);
/// (2πi)^{-n}∫_M Td·𝒥 at the identity.
DeltaGerm identity_germ(const ContactModel& model, const Conventions& conv);
/// (2πi)^{-n}∫_M 𝒥: the identity germ with the Todd factor replaced by 1.
DeltaGerm dh_fourier(const ContactModel& model, const Conventions& conv);

struct CharacterResult {
  std::vector<std::pair<TorsionPoint, DeltaGerm>> germs;
  /// Exact sum of the Fourier contributions.
  QuasiPolynomial total;
  /// c_m for |m| ≤ max_m.
  std::map<long, ExactScalar> coefficients;
  /// Refit from samples at the expected period and degree.
  QuasiPolynomial fitted;
  std::vector<long> non_integer;
};

CharacterResult assemble_character(const ContactModel& model, long max_m, const Conventions& conv);

/// m ↦ ind^G(σ_m) as a Laurent polynomial in the G-variable h, |m| ≤ max_m.
std::map<long, LaurentPolynomial> corollary_expand(const ContactModel& model, long max_m, const Conventions& conv);

}  // namespace contact_index
