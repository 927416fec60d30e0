#include "contact_index/rational.hpp"

#include <cctype>
#include <numeric>
#include <utility>

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Rational r;
  r.get_num() = Integer(std::string(num));
  r.get_den() = den.empty() ? Integer(1) : Integer(std::string(den));
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  if (text.front() == '-') r = -r;
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational frac(long p, long q) {
  if (q == 0) throw DomainError("zero denominator");
  Rational r{Integer(p), Integer(q)};
  r.canonicalize();
  return r;
}

long gcd(long a, long b) { return std::gcd(a, b); }
long lcm(long a, long b) { return std::lcm(a, b); }

std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_col_of_row;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows && a[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[pivot_row]);
    std::swap(b[sel], b[pivot_row]);
    const Rational inv = 1 / a[pivot_row][col];
    for (std::size_t c = col; c < cols; ++c) a[pivot_row][c] *= inv;
    b[pivot_row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[pivot_row][c];
      b[r] -= f * b[pivot_row];
    }
    pivot_col_of_row.push_back(col);
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows; ++r) {
    if (b[r] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivot_row; ++r) x[pivot_col_of_row[r]] = b[r];
  return x;
}

}  // namespace contact_index
