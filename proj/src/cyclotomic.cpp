#include "contact_index/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

void check_level(int level) {
  if (level < 4 || level % 4 != 0) {
    throw DomainError("cyclotomic level must be a positive multiple of 4, got " + std::to_string(level));
  }
}

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Reduces an arbitrary polynomial in ζ_L: first x^L = 1, then modulo Φ_L.
std::vector<Rational> reduce(const std::vector<Rational>& poly, int level) {
  std::vector<Rational> folded(static_cast<std::size_t>(level));
  for (std::size_t e = 0; e < poly.size(); ++e) {
    if (poly[e] != 0) folded[e % static_cast<std::size_t>(level)] += poly[e];
  }
  const auto& phi_poly = cyclotomic_polynomial(level);
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t top = folded.size(); top-- > deg;) {
    if (folded[top] == 0) continue;
    const Rational c = folded[top];
    const std::size_t shift = top - deg;
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi_poly[j] != 0) folded[shift + j] -= c * Rational(static_cast<long>(phi_poly[j]));
    }
  }
  folded.resize(deg);
  trim(folded);
  return folded;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Φ_n = (x^n - 1) / ∏_{d | n, d < n} Φ_d by exact division over Z; the
// divisor polynomials are taken from (and added to) `cache`.
const std::vector<long long>& build_phi(int n, std::map<int, std::vector<long long>>& cache) {
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<long long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long long> den = build_phi(d, cache);
    const std::size_t dd = den.size() - 1;
    std::vector<long long> quot(num.size() - dd, 0);
    for (std::size_t top = num.size(); top-- > dd;) {
      const long long c = num[top];  // den is monic
      quot[top - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[top - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<long long>> cache;
  std::lock_guard lock(mutex);
  return build_phi(n, cache);
}

CyclotomicNumber::CyclotomicNumber(const Rational& r) {
  if (r != 0) coeffs_.push_back(r);
}

CyclotomicNumber CyclotomicNumber::from_coefficients(int level, std::vector<Rational> coeffs) {
  check_level(level);
  CyclotomicNumber out;
  out.level_ = level;
  out.coeffs_ = reduce(coeffs, level);
  return out;
}

CyclotomicNumber CyclotomicNumber::zeta(int level, long exponent) {
  check_level(level);
  long e = exponent % level;
  if (e < 0) e += level;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = 1;
  return from_coefficients(level, std::move(c));
}

CyclotomicNumber CyclotomicNumber::root_of_unity(const Rational& angle) {
  Rational a = angle;
  const long den = a.get_den().get_si();
  const long num = a.get_num().get_si();
  const long level = lcm(4, den);
  return zeta(static_cast<int>(level), num * (level / den));
}

CyclotomicNumber CyclotomicNumber::i() { return zeta(4, 1); }

CyclotomicNumber CyclotomicNumber::promote(int target_level) const {
  check_level(target_level);
  if (target_level % level_ != 0) {
    throw DomainError("cannot promote level " + std::to_string(level_) + " to " +
                      std::to_string(target_level) + ": not a multiple");
  }
  if (target_level == level_) return *this;
  const std::size_t step = static_cast<std::size_t>(target_level / level_);
  std::vector<Rational> c(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * step + 1);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) c[e * step] = coeffs_[e];
  return from_coefficients(target_level, std::move(c));
}

CyclotomicNumber CyclotomicNumber::demote() const {
  if (coeffs_.size() <= 1) {
    CyclotomicNumber out = *this;
    out.level_ = 4;
    return out;
  }
  for (int d = 4; d < level_; d += 4) {
    if (level_ % d != 0) continue;
    const int phi_d = euler_phi(d);
    const int phi_l = euler_phi(level_);
    const long step = level_ / d;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(phi_l),
                                         std::vector<Rational>(static_cast<std::size_t>(phi_d)));
    for (int e = 0; e < phi_d; ++e) {
      const auto img = zeta(level_, e * step);
      for (std::size_t r = 0; r < img.coeffs_.size(); ++r) a[r][static_cast<std::size_t>(e)] = img.coeffs_[r];
    }
    std::vector<Rational> b(static_cast<std::size_t>(phi_l));
    for (std::size_t r = 0; r < coeffs_.size(); ++r) b[r] = coeffs_[r];
    if (auto sol = solve_linear(std::move(a), std::move(b))) {
      return from_coefficients(d, std::move(*sol));
    }
  }
  return *this;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  std::vector<Rational> c(static_cast<std::size_t>(level_) + 1);
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    c[(static_cast<std::size_t>(level_) - e) % static_cast<std::size_t>(level_)] += coeffs_[e];
  }
  return from_coefficients(level_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic number");
  const int phi = euler_phi(level_);
  // Columns: x·ζ^j reduced; solve for y with x·y = 1.
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(phi), std::vector<Rational>(static_cast<std::size_t>(phi)));
  for (int j = 0; j < phi; ++j) {
    const auto col = *this * zeta(level_, j);
    for (std::size_t r = 0; r < col.coeffs_.size(); ++r) a[r][static_cast<std::size_t>(j)] = col.coeffs_[r];
  }
  std::vector<Rational> b(static_cast<std::size_t>(phi));
  b[0] = 1;
  auto sol = solve_linear(std::move(a), std::move(b));
  if (!sol) throw DomainError("cyclotomic inverse failed");
  return from_coefficients(level_, std::move(*sol));
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  if (coeffs_.empty()) return Rational(0);
  if (coeffs_.size() == 1) return coeffs_[0];
  return std::nullopt;
}

std::complex<long double> CyclotomicNumber::to_complex() const {
  std::complex<long double> z{0, 0};
  for (std::size_t e = 0; e < coeffs_.size(); ++e) {
    if (coeffs_[e] == 0) continue;
    const long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(e) / level_;
    z += static_cast<long double>(coeffs_[e].get_d()) * std::polar<long double>(1, angle);
  }
  return z;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  const int l = static_cast<int>(lcm(level_, o.level_));
  CyclotomicNumber a = promote(l);
  const CyclotomicNumber b = o.promote(l);
  if (a.coeffs_.size() < b.coeffs_.size()) a.coeffs_.resize(b.coeffs_.size());
  for (std::size_t e = 0; e < b.coeffs_.size(); ++e) a.coeffs_[e] += b.coeffs_[e];
  trim(a.coeffs_);
  return *this = std::move(a);
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this += -o; }

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (is_zero() || o.is_zero()) {
    level_ = static_cast<int>(lcm(level_, o.level_));
    coeffs_.clear();
    return *this;
  }
  const int l = static_cast<int>(lcm(level_, o.level_));
  const CyclotomicNumber a = promote(l);
  const CyclotomicNumber b = o.promote(l);
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return *this = from_coefficients(l, std::move(prod));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.level_ == b.level_) return a.coeffs_ == b.coeffs_;
  const int l = static_cast<int>(lcm(a.level_, b.level_));
  return a.promote(l).coeffs_ == b.promote(l).coeffs_;
}

}  // namespace contact_index
