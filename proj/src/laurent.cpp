#include "contact_index/laurent.hpp"

#include "contact_index/errors.hpp"

namespace contact_index {

LaurentPolynomial::LaurentPolynomial(const Rational& c) { add_term(0, c); }

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const Rational& c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

Rational LaurentPolynomial::coefficient(long e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPolynomial::evaluate_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPolynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")·h^" + std::to_string(e);
  }
  return out;
}

void LaurentPolynomial::add_term(long e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) { return *this += -o; }

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& o) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  }
  return *this = std::move(out);
}

LaurentPolynomial divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (den.is_zero()) throw DomainError("division by the zero Laurent polynomial");
  // Long division from the top degree down.
  LaurentPolynomial rem = num, quot;
  const auto [dtop, dlead] = *den.terms().rbegin();
  const long dlow = den.terms().begin()->first;
  while (!rem.is_zero()) {
    const auto [rtop, rlead] = *rem.terms().rbegin();
    if (rtop - (dtop - dlow) < rem.terms().begin()->first) break;
    const LaurentPolynomial step = LaurentPolynomial::monomial(rtop - dtop, rlead / dlead);
    quot += step;
    rem -= step * den;
  }
  if (!rem.is_zero()) throw DomainError("quotient is not a Laurent polynomial; remainder " + rem.to_text());
  return quot;
}

}  // namespace contact_index
