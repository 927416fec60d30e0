#include "contact_index/oracle.hpp"

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

Integer enumerate(const std::vector<long>& a, std::size_t i, long rem) {
  if (i + 1 == a.size()) return rem % a[i] == 0 ? 1 : 0;
  Integer total = 0;
  for (long k = 0; k * a[i] <= rem; ++k) total += enumerate(a, i + 1, rem - k * a[i]);
  return total;
}

// Visits every k ∈ Z_{≥lo}^{n+1} with |k| = total.
template <class F>
void compositions(int parts, long total, long lo, std::vector<long>& k, F&& visit) {
  if (static_cast<int>(k.size()) + 1 == parts) {
    if (total < lo) return;
    k.push_back(total);
    visit(k);
    k.pop_back();
    return;
  }
  for (long v = lo; v <= total - lo * (parts - static_cast<long>(k.size()) - 1); ++v) {
    k.push_back(v);
    compositions(parts, total - v, lo, k, visit);
    k.pop_back();
  }
}

void check_weights(const std::vector<long>& a) {
  if (a.empty()) throw DomainError("lattice count needs at least one weight");
  for (long w : a) {
    if (w < 1) throw DomainError("lattice weights must be positive");
  }
}

}  // namespace

Integer lattice_count(const std::vector<long>& a, long m) {
  check_weights(a);
  if (m < 0) return 0;
  return enumerate(a, 0, m);
}

Integer lattice_count_series(const std::vector<long>& a, long m) {
  check_weights(a);
  if (m < 0) return 0;
  std::vector<Integer> c(static_cast<std::size_t>(m) + 1);
  c[0] = 1;
  for (long w : a) {
    // Multiply by 1/(1 − t^w).
    for (long e = w; e <= m; ++e) c[static_cast<std::size_t>(e)] += c[static_cast<std::size_t>(e - w)];
  }
  return c[static_cast<std::size_t>(m)];
}

Integer sphere_char_oracle(long a, long b, long m) {
  return lattice_count({a, b}, -m) - lattice_count({a, b}, m - (a + b));
}

Integer cpn_chi(int n, long m) {
  if (n < 0) throw DomainError("negative projective dimension");
  const std::vector<long> ones(static_cast<std::size_t>(n) + 1, 1);
  if (m >= 0) return lattice_count(ones, m);
  if (m <= -n - 1) {
    const Integer dual = lattice_count(ones, -m - n - 1);
    return n % 2 == 0 ? dual : Integer(-dual);
  }
  return 0;
}

Integer cpn_chi_series(int n, long m) {
  const std::vector<long> ones(static_cast<std::size_t>(n) + 1, 1);
  if (m >= 0) return lattice_count_series(ones, m);
  if (m <= -n - 1) {
    const Integer dual = lattice_count_series(ones, -m - n - 1);
    return n % 2 == 0 ? dual : Integer(-dual);
  }
  return 0;
}

Rational cpn_chi_polynomial(int n, long m) {
  Rational r = 1;
  for (int j = 1; j <= n; ++j) r *= frac(m + j, j);
  return r;
}

std::map<long, Integer> equivariant_cpn_character(int n, long m) {
  std::map<long, Integer> out;
  std::vector<long> k;
  const auto weight = [](const std::vector<long>& k) {
    long w = 0;
    for (std::size_t i = 0; i < k.size(); ++i) w += static_cast<long>(i) * k[i];
    return w;
  };
  if (m >= 0) {
    // H⁰: monomials z^k with |k| = m.
    compositions(n + 1, m, 0, k, [&](const std::vector<long>& v) { out[weight(v)] += 1; });
  } else if (m <= -n - 1) {
    // Hⁿ: dual to H⁰(O(−m−n−1)) ⊗ K, spanned by z^{−k} with k_i ≥ 1, |k| = −m.
    const Integer sign = n % 2 == 0 ? 1 : -1;
    compositions(n + 1, -m, 1, k, [&](const std::vector<long>& v) { out[-weight(v)] += sign; });
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<long, Integer> equivariant_s2_character(long m) { return equivariant_cpn_character(1, m); }

ExactScalar ball_integral(int n) {
  if (n < 0) throw DomainError("negative sphere dimension");
  // dα = −2 Σ dx_j∧dy_j, so (dα)^{n+1} = (−2)^{n+1}(n+1)!·vol on B^{2n+2},
  // and vol(B^{2n+2}) = π^{n+1}/(n+1)!.
  Integer fact = 1;
  for (int j = 2; j <= n + 1; ++j) fact *= j;
  const Integer two_pow = Integer(1) << (n + 1);
  const Rational form_coeff = Rational(n % 2 == 0 ? Integer(-two_pow) : two_pow) * Rational(fact);
  const ExactScalar volume = ExactScalar(Rational(1) / Rational(fact)) * ExactScalar::pi(n + 1);
  return ExactScalar(form_coeff) * volume;
}

ExactScalar weighted_s3_volume(long a, long b) {
  if (a < 1 || b < 1) throw DomainError("weights must be positive");
  // With s = r₁², ∫ α∧dα = 4π²∫₀¹ ds/(b + (a−b)s)², oriented as in the round
  // case a = b = 1; the antiderivative is −1/((a−b)(b + (a−b)s)).
  Rational integral;
  if (a == b) {
    integral = frac(1, a * a);
  } else {
    const Rational d(a - b);
    const auto antiderivative = [&](const Rational& s) -> Rational { return -1 / (d * (Rational(b) + d * s)); };
    integral = antiderivative(1) - antiderivative(0);
  }
  return ExactScalar(Rational(4) * integral) * ExactScalar::pi(2);
}

}  // namespace contact_index
