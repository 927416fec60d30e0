#include "contact_index/smooth_jet.hpp"

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

void check_jet_space(const JetSpace& s) {
  if (s.vars < 1 || s.vars > 2) throw DomainError("jets support 1 or 2 variables, got " + std::to_string(s.vars));
  if (s.order < 0) throw DomainError("negative jet order");
}

}  // namespace

SmoothJet::SmoothJet(JetSpace space) : space_(space) { check_jet_space(space); }

SmoothJet SmoothJet::constant(JetSpace space, const ExactScalar& c) { return monomial(space, {0, 0}, c); }

SmoothJet SmoothJet::variable(JetSpace space, int var) {
  if (var < 0 || var >= space.vars) throw DomainError("variable index out of range");
  MultiIndex k{0, 0};
  k[static_cast<std::size_t>(var)] = 1;
  return monomial(space, k, 1);
}

SmoothJet SmoothJet::monomial(JetSpace space, const MultiIndex& k, const ExactScalar& c) {
  SmoothJet out(space);
  if (space.vars == 1 && k[1] != 0) throw DomainError("second exponent on a one-variable jet");
  out.add_term(k, c);
  return out;
}

ExactScalar SmoothJet::coefficient(const MultiIndex& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? ExactScalar() : it->second;
}

std::string SmoothJet::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_text() + "]";
    if (k[0] > 0) out += "·x^" + std::to_string(k[0]);
    if (k[1] > 0) out += "·y^" + std::to_string(k[1]);
  }
  return out;
}

void SmoothJet::check_space(const SmoothJet& o) const {
  if (!(space_ == o.space_)) throw DomainError("jet space mismatch");
}

void SmoothJet::add_term(const MultiIndex& k, const ExactScalar& c) {
  if (total_degree(k) > space_.order || c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SmoothJet SmoothJet::operator-() const {
  SmoothJet out(space_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

SmoothJet& SmoothJet::operator+=(const SmoothJet& o) {
  check_space(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SmoothJet& SmoothJet::operator-=(const SmoothJet& o) { return *this += -o; }

SmoothJet& SmoothJet::operator*=(const SmoothJet& o) {
  check_space(o);
  SmoothJet out(space_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) out.add_term({ka[0] + kb[0], ka[1] + kb[1]}, ca * cb);
  }
  return *this = std::move(out);
}

SmoothJet& SmoothJet::operator*=(const ExactScalar& c) {
  SmoothJet out(space_);
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  return *this = std::move(out);
}

}  // namespace contact_index
