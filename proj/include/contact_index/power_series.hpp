#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contact_index/rational.hpp"

namespace contact_index {

/// Which Todd series x/(1-e^{-x}) or x/(e^x-1) is used for a root value x.
enum class ToddDirection { OneMinusExpNeg, ExpMinusOne };

std::string to_string(ToddDirection d);
ToddDirection parse_todd_direction(std::string_view text);

/// B_0..B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n);
/// Taylor coefficients of the Todd series up to x^n.
std::vector<Rational> todd_coefficients(ToddDirection d, int n);
/// 1/k! for k = 0..n.
std::vector<Rational> exp_coefficients(int n);
/// Coefficients of 1/f for a series with f[0] != 0, up to x^n.
std::vector<Rational> series_inverse(const std::vector<Rational>& f, int n);

}  // namespace contact_index
