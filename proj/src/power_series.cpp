#include "contact_index/power_series.hpp"

#include "contact_index/errors.hpp"

namespace contact_index {

std::string to_string(ToddDirection d) {
  return d == ToddDirection::OneMinusExpNeg ? "x/(1-e^{-x})" : "x/(e^x-1)";
}

ToddDirection parse_todd_direction(std::string_view text) {
  if (text == "x/(1-e^{-x})") return ToddDirection::OneMinusExpNeg;
  if (text == "x/(e^x-1)") return ToddDirection::ExpMinusOne;
  throw ParseError("unknown Todd direction '" + std::string(text) + "'");
}

std::vector<Rational> bernoulli_numbers(int n) {
  // Σ_{k<m+1} binom(m+1,k) B_k = 0 for m ≥ 1.
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // binom(m+1, k)
    for (int k = 0; k < m; ++k) {
      acc += Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

std::vector<Rational> exp_coefficients(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) - 1] / k;
  return c;
}

std::vector<Rational> todd_coefficients(ToddDirection d, int n) {
  // x/(e^x-1) = Σ B_k x^k/k!; x/(1-e^{-x}) is the same series at -x.
  const auto b = bernoulli_numbers(n);
  const auto inv_fact = exp_coefficients(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    c[i] = b[i] * inv_fact[i];
    if (d == ToddDirection::OneMinusExpNeg && k % 2 == 1) c[i] = -c[i];
  }
  return c;
}

std::vector<Rational> series_inverse(const std::vector<Rational>& f, int n) {
  if (f.empty() || f[0] == 0) throw DomainError("series inverse needs a nonzero constant term");
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  g[0] = 1 / f[0];
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k && j < static_cast<int>(f.size()); ++j) {
      acc += f[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k - j)];
    }
    g[static_cast<std::size_t>(k)] = -acc / f[0];
  }
  return g;
}

}  // namespace contact_index
