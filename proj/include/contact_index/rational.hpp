#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace contact_index {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q > 0). Whitespace and decimals are rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
/// p/q in lowest terms (q != 0).
Rational frac(long p, long q);

long lcm(long a, long b);
long gcd(long a, long b);

/// Exact solve of A x = b over the rationals (A is rows x cols, rows >= cols).
/// Returns nullopt when the system is inconsistent. A must have full column rank.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

}  // namespace contact_index
