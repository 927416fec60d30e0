#pragma once

#include <map>
#include <vector>

#include "contact_index/exact_scalar.hpp"

namespace contact_index {

/// #{k ∈ Z_{≥0}^{len a} : Σ a_i k_i = m} by direct enumeration.
Integer lattice_count(const std::vector<long>& a, long m);
/// Coefficient of t^m in ∏ 1/(1 − t^{a_i}), expanded exactly.
Integer lattice_count_series(const std::vector<long>& a, long m);

/// L(−m) − L(m − a − b) for the weights (a, b).
Integer sphere_char_oracle(long a, long b, long m);

/// χ(CP^n, O(m)) by monomial enumeration and its dual for m ≤ −n−1.
Integer cpn_chi(int n, long m);
/// The same through the generating-series route.
Integer cpn_chi_series(int n, long m);
/// binom(m+n, n) as a polynomial in m.
Rational cpn_chi_polynomial(int n, long m);

/// Character of H^*(CP^n, O(m)) under the rotation t·z_i = t^i z_i: weight ↦ signed multiplicity.
std::map<long, Integer> equivariant_cpn_character(int n, long m);
std::map<long, Integer> equivariant_s2_character(long m);

/// ∫_{S^{2n+1}} α∧(dα)^n for α = Σ (y_j dx_j − x_j dy_j), through Stokes on the ball.
ExactScalar ball_integral(int n);
/// ∫_{S³} α∧dα for the weighted form α = (r₁²dθ₁ + r₂²dθ₂)/(a r₁² + b r₂²).
ExactScalar weighted_s3_volume(long a, long b);

}  // namespace contact_index
