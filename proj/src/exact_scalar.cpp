#include "contact_index/exact_scalar.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <regex>
#include <sstream>

#include "contact_index/errors.hpp"

namespace contact_index {

ExactScalar::ExactScalar(const CyclotomicNumber& c, int pi_power) {
  if (!c.is_zero()) terms_.emplace(pi_power, c);
}

ExactScalar ExactScalar::pi(int power) { return ExactScalar(CyclotomicNumber(1), power); }

ExactScalar ExactScalar::i() { return ExactScalar(CyclotomicNumber::i()); }

ExactScalar ExactScalar::root_of_unity(const Rational& angle) {
  return ExactScalar(CyclotomicNumber::root_of_unity(angle));
}

ExactScalar ExactScalar::two_pi_i(int k) {
  // (2i)^k π^k; (2i)^{-1} = -i/2.
  const CyclotomicNumber two_i = CyclotomicNumber(2) * CyclotomicNumber::i();
  CyclotomicNumber c(1);
  const CyclotomicNumber step = k >= 0 ? two_i : two_i.inverse();
  for (int j = 0; j < std::abs(k); ++j) c *= step;
  return ExactScalar(c, k);
}

ExactScalar ExactScalar::inverse() const {
  if (!is_invertible()) {
    throw DomainError("scalar with " + std::to_string(terms_.size()) +
                      " π-terms is not invertible (need exactly one nonzero term): " + to_text());
  }
  const auto& [k, c] = *terms_.begin();
  return ExactScalar(c.inverse(), -k);
}

ExactScalar ExactScalar::conj() const {
  ExactScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
  return out;
}

std::optional<Rational> ExactScalar::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() != 1 || terms_.begin()->first != 0) return std::nullopt;
  return terms_.begin()->second.as_rational();
}

std::complex<long double> ExactScalar::to_complex() const {
  std::complex<long double> z{0, 0};
  for (const auto& [k, c] : terms_) z += c.to_complex() * std::pow(std::numbers::pi_v<long double>, k);
  return z;
}

std::string ExactScalar::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    const CyclotomicNumber m = c.demote();
    for (std::size_t e = 0; e < m.coeffs().size(); ++e) {
      if (m.coeffs()[e] == 0) continue;
      if (!out.empty()) out += " + ";
      out += "(" + to_string(m.coeffs()[e]) + "·ζ_" + std::to_string(m.level()) + "^" + std::to_string(e) +
             ")·π^" + std::to_string(k);
    }
  }
  return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  if (text == "0") return {};
  static const std::regex term(R"(\((-?\d+(?:/\d+)?)·ζ_(\d+)\^(\d+)\)·π\^(-?\d+))");
  const std::string s(text);
  ExactScalar out;
  std::size_t pos = 0;
  while (true) {
    std::smatch m;
    if (!std::regex_search(s.cbegin() + static_cast<long>(pos), s.cend(), m, term,
                           std::regex_constants::match_continuous)) {
      throw ParseError("malformed scalar term at offset " + std::to_string(pos) + " in '" + s + "'");
    }
    const int level = std::stoi(m[2].str());
    if (level < 4 || level % 4 != 0 || level > 100000) throw ParseError("bad cyclotomic level in '" + s + "'");
    const CyclotomicNumber c =
        CyclotomicNumber(parse_rational(m[1].str())) * CyclotomicNumber::zeta(level, std::stol(m[3].str()));
    out += ExactScalar(c, std::stoi(m[4].str()));
    pos += static_cast<std::size_t>(m.length(0));
    if (pos == s.size()) break;
    if (s.compare(pos, 3, " + ") != 0) throw ParseError("expected ' + ' at offset " + std::to_string(pos) + " in '" + s + "'");
    pos += 3;
  }
  return out;
}

std::string ExactScalar::approx(int digits) const {
  const auto z = to_complex();
  const long double tol = 0.5L * std::pow(10.0L, -digits);
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits);
  const long double re = std::abs(z.real()) < tol ? 0.0L : z.real();
  if (std::abs(z.imag()) < tol) {
    os << re;
  } else {
    os << re << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  ExactScalar out;
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) out += ExactScalar(ca * cb, ka + kb);
  }
  return *this = std::move(out);
}

ExactScalar pow(const ExactScalar& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  ExactScalar result(1);
  for (int j = 0; j < exponent; ++j) result *= base;
  return result;
}

}  // namespace contact_index
