#pragma once

#include <array>
#include <map>
#include <string>

#include "contact_index/exact_scalar.hpp"

namespace contact_index {

/// Exponents (or derivative orders) in up to two local torus variables.
using MultiIndex = std::array<int, 2>;

inline int total_degree(const MultiIndex& k) { return k[0] + k[1]; }

/// Number of local variables and the total-degree truncation of jets.
struct JetSpace {
  int vars = 1;
  int order = 0;
  friend bool operator==(const JetSpace&, const JetSpace&) = default;
};

/// Truncated polynomial in the local variables with exact coefficients.
class SmoothJet {
 public:
  explicit SmoothJet(JetSpace space = {});

  static SmoothJet constant(JetSpace space, const ExactScalar& c);
  /// The coordinate function x_var.
  static SmoothJet variable(JetSpace space, int var);
  static SmoothJet monomial(JetSpace space, const MultiIndex& k, const ExactScalar& c);

  const JetSpace& space() const noexcept { return space_; }
  const std::map<MultiIndex, ExactScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  ExactScalar coefficient(const MultiIndex& k) const;
  std::string to_text() const;

  SmoothJet operator-() const;
  SmoothJet& operator+=(const SmoothJet& o);
  SmoothJet& operator-=(const SmoothJet& o);
  SmoothJet& operator*=(const SmoothJet& o);
  SmoothJet& operator*=(const ExactScalar& c);

  friend SmoothJet operator+(SmoothJet a, const SmoothJet& b) { return a += b; }
  friend SmoothJet operator-(SmoothJet a, const SmoothJet& b) { return a -= b; }
  friend SmoothJet operator*(SmoothJet a, const SmoothJet& b) { return a *= b; }
  friend SmoothJet operator*(SmoothJet a, const ExactScalar& c) { return a *= c; }
  friend SmoothJet operator*(const ExactScalar& c, SmoothJet a) { return a *= c; }
  friend bool operator==(const SmoothJet&, const SmoothJet&) = default;

 private:
  void check_space(const SmoothJet& o) const;
  void add_term(const MultiIndex& k, const ExactScalar& c);

  JetSpace space_;
  std::map<MultiIndex, ExactScalar> terms_;
};

}  // namespace contact_index
