#include "contact_index/form_algebra.hpp"

#include <numeric>

#include "contact_index/errors.hpp"

namespace contact_index {

GeneralizedCoefficient::GeneralizedCoefficient(JetSpace space) : smooth_(space) {}

GeneralizedCoefficient GeneralizedCoefficient::smooth(const SmoothJet& s) {
  GeneralizedCoefficient c(s.space());
  c.smooth_ = s;
  return c;
}

GeneralizedCoefficient GeneralizedCoefficient::delta(const MultiIndex& order, const SmoothJet& weight) {
  GeneralizedCoefficient c(weight.space());
  if (!weight.is_zero()) c.deltas_.emplace(order, weight);
  return c;
}

DeltaGerm GeneralizedCoefficient::to_germ() const {
  if (!smooth_.is_zero()) {
    throw DomainError("a smooth coefficient does not integrate to a germ supported at a point: " + smooth_.to_text());
  }
  const int vars = smooth_.space().vars;
  DeltaGerm g(vars);
  for (const auto& [j, w] : deltas_) g += multiply_smooth(DeltaGerm::delta(vars, j, 1), w);
  return g;
}

std::string GeneralizedCoefficient::to_text() const {
  std::string out;
  if (!smooth_.is_zero()) out = "(" + smooth_.to_text() + ")";
  for (const auto& [j, w] : deltas_) {
    if (!out.empty()) out += " + ";
    out += "(" + w.to_text() + ")·δ^(" + std::to_string(j[0]);
    if (smooth_.space().vars == 2) out += "," + std::to_string(j[1]);
    out += ")";
  }
  return out.empty() ? "0" : out;
}

GeneralizedCoefficient& GeneralizedCoefficient::operator+=(const GeneralizedCoefficient& o) {
  smooth_ += o.smooth_;
  for (const auto& [j, w] : o.deltas_) {
    auto [it, inserted] = deltas_.emplace(j, w);
    if (inserted) continue;
    it->second += w;
    if (it->second.is_zero()) deltas_.erase(it);
  }
  return *this;
}

GeneralizedCoefficient& GeneralizedCoefficient::operator*=(const GeneralizedCoefficient& o) {
  if (!deltas_.empty() && !o.deltas_.empty()) throw DomainError("product of two delta coefficients is undefined");
  GeneralizedCoefficient out(smooth_.space());
  out.smooth_ = smooth_ * o.smooth_;
  const auto spread = [&out](const std::map<MultiIndex, SmoothJet>& deltas, const SmoothJet& s) {
    for (const auto& [j, w] : deltas) out += delta(j, w * s);
  };
  spread(deltas_, o.smooth_);
  spread(o.deltas_, smooth_);
  return *this = std::move(out);
}

GeneralizedCoefficient& GeneralizedCoefficient::operator*=(const ExactScalar& c) {
  return *this *= smooth(SmoothJet::constant(smooth_.space(), c));
}

FormElement::FormElement(FormSpace space) : space_(space) {
  if (space.generators < 0 || space.top_degree < 0) throw DomainError("invalid form space");
}

FormElement FormElement::term(FormSpace space, FormKey key, GeneralizedCoefficient c) {
  FormElement f(space);
  if (key.exps.size() != static_cast<std::size_t>(space.generators)) throw DomainError("form key has wrong length");
  f.add_term(key, c);
  return f;
}

FormElement FormElement::one(FormSpace space) { return scalar(space, 1); }

FormElement FormElement::scalar(FormSpace space, const ExactScalar& c) {
  return jet(space, SmoothJet::constant(space.jet, c));
}

FormElement FormElement::jet(FormSpace space, const SmoothJet& s) {
  return term(space, {false, std::vector<int>(static_cast<std::size_t>(space.generators))},
              GeneralizedCoefficient::smooth(s));
}

FormElement FormElement::generator(FormSpace space, int g) {
  if (g < 0 || g >= space.generators) throw DomainError("generator index out of range");
  FormKey key{false, std::vector<int>(static_cast<std::size_t>(space.generators))};
  key.exps[static_cast<std::size_t>(g)] = 1;
  return term(space, key, GeneralizedCoefficient::smooth(SmoothJet::constant(space.jet, 1)));
}

FormElement FormElement::alpha(FormSpace space) {
  return term(space, {true, std::vector<int>(static_cast<std::size_t>(space.generators))},
              GeneralizedCoefficient::smooth(SmoothJet::constant(space.jet, 1)));
}

std::string FormElement::dump() const {
  std::string out;
  for (const auto& [key, c] : terms_) {
    out += key.alpha ? "α" : "1";
    for (std::size_t g = 0; g < key.exps.size(); ++g) {
      if (key.exps[g] > 0) out += "·g" + std::to_string(g) + "^" + std::to_string(key.exps[g]);
    }
    out += " : " + c.to_text() + "\n";
  }
  return out;
}

void FormElement::check_space(const FormElement& o) const {
  if (!(space_ == o.space_)) throw DomainError("form elements over different generator bases or truncations");
}

void FormElement::add_term(const FormKey& key, const GeneralizedCoefficient& c) {
  if (std::accumulate(key.exps.begin(), key.exps.end(), 0) > space_.top_degree || c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FormElement& FormElement::operator+=(const FormElement& o) {
  check_space(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

FormElement& FormElement::operator-=(const FormElement& o) { return *this += o * ExactScalar(-1); }

FormElement& FormElement::operator*=(const FormElement& o) {
  check_space(o);
  FormElement out(space_);
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      if (ka.alpha && kb.alpha) continue;  // α∧α = 0
      FormKey key{ka.alpha || kb.alpha, ka.exps};
      int degree = 0;
      for (std::size_t g = 0; g < key.exps.size(); ++g) degree += key.exps[g] += kb.exps[g];
      if (degree > space_.top_degree) continue;
      out.add_term(key, ca * cb);
    }
  }
  return *this = std::move(out);
}

FormElement& FormElement::operator*=(const ExactScalar& c) {
  FormElement out(space_);
  for (const auto& [k, v] : terms_) {
    GeneralizedCoefficient w = v;
    w *= c;
    out.add_term(k, w);
  }
  return *this = std::move(out);
}

FormElement multiply(const FormElement& a, const FormElement& b) { return a * b; }

int nilpotency_bound(const FormSpace& space) { return space.top_degree + space.jet.order; }

FormElement apply_series(const std::vector<Rational>& coeffs, const FormElement& x) {
  const int n = std::min(static_cast<int>(coeffs.size()) - 1, nilpotency_bound(x.space()));
  FormElement r(x.space());
  for (int k = n; k >= 0; --k) r = r * x + FormElement::scalar(x.space(), coeffs[static_cast<std::size_t>(k)]);
  return r;
}

FormElement equivariant_value(const ChernRoot& root, const FormSpace& space) {
  if (root.curvature.size() != static_cast<std::size_t>(space.generators)) {
    throw DomainError("root curvature has " + std::to_string(root.curvature.size()) + " entries, expected " +
                      std::to_string(space.generators));
  }
  if (root.weight.size() != static_cast<std::size_t>(space.jet.vars)) {
    throw DomainError("root weight does not match the torus rank");
  }
  FormElement v(space);
  for (int g = 0; g < space.generators; ++g) {
    v += FormElement::generator(space, g) * root.curvature[static_cast<std::size_t>(g)];
  }
  SmoothJet w(space.jet);
  for (int var = 0; var < space.jet.vars; ++var) {
    w += SmoothJet::variable(space.jet, var) * ExactScalar(root.weight[static_cast<std::size_t>(var)]);
  }
  return v + FormElement::jet(space, w * ExactScalar::i());
}

FormElement todd(const std::vector<ChernRoot>& roots, const FormSpace& space, ToddDirection direction) {
  const auto coeffs = todd_coefficients(direction, nilpotency_bound(space));
  FormElement out = FormElement::one(space);
  for (const auto& r : roots) out *= apply_series(coeffs, equivariant_value(r, space));
  return out;
}

FormElement dC_inverse(const std::vector<ChernRoot>& roots, const FormSpace& space) {
  const int n = nilpotency_bound(space);
  auto exp_minus_one = exp_coefficients(n);
  exp_minus_one[0] = 0;
  const std::vector<Rational> geometric(static_cast<std::size_t>(n) + 1, Rational(1));
  FormElement out = FormElement::one(space);
  for (const auto& r : roots) {
    const Rational angle = make_torsion_point({r.eig})[0];
    if (angle == 0) {
      throw FixedSetMismatchError("normal root with eigenvalue 1: the group element fixes a normal direction, so "
                                  "this component is not its fixed set (the fixed set must be a contact submanifold)");
    }
    // 1 − μe^{−x} = (1−μ)(1 − ε), ε = μ(e^{−x} − 1)/(1 − μ), μ = conj(λ).
    const ExactScalar mu = ExactScalar::root_of_unity(-angle);
    const ExactScalar inv = (ExactScalar(1) - mu).inverse();
    const FormElement x = equivariant_value(r, space) * ExactScalar(-1);
    const FormElement eps = apply_series(exp_minus_one, x) * (mu * inv);
    out *= apply_series(geometric, eps) * inv;
  }
  return out;
}

FormElement pullback_affine_nilpotent(const DeltaGerm& u, const AffineForm& a, const FormElement& nu, int maxdeg) {
  const FormSpace& space = nu.space();
  if (u.vars() != space.jet.vars) throw DomainError("germ and form space have different variables");
  const FormKey unit{false, std::vector<int>(static_cast<std::size_t>(space.generators))};
  FormElement out(space);
  FormElement nu_power = FormElement::one(space);
  Rational inv_fact = 1;
  for (int j = 0; j <= maxdeg; ++j) {
    if (j > 0) {
      nu_power *= nu;
      inv_fact /= j;
    }
    if (nu_power.is_zero()) break;
    const DeltaGerm g = pullback_affine(differentiate(u, j), a);
    FormElement coeff(space);
    for (const auto& [k, c] : g.terms()) {
      coeff += FormElement::term(space, unit, GeneralizedCoefficient::delta(k, SmoothJet::constant(space.jet, c)));
    }
    out += coeff * nu_power * ExactScalar(inv_fact);
  }
  return out;
}

FormElement j_form(const Rational& mu, const std::vector<long>& reeb_weight, const FormSpace& space) {
  if (mu <= 0) {
    throw EllipticityError("ellipticity violated: moment μ = " + to_string(mu) + " must be positive");
  }
  if (space.generators < 1) throw DomainError("the 𝒥-form needs the dα generator");
  if (reeb_weight.size() != static_cast<std::size_t>(space.jet.vars)) {
    throw DomainError("Reeb weight does not match the torus rank");
  }
  AffineForm a;
  for (long w : reeb_weight) a.w.push_back(-mu * Rational(w));
  const DeltaGerm u = DeltaGerm::delta(space.jet.vars, {0, 0}, 1);
  return FormElement::alpha(space) *
         pullback_affine_nilpotent(u, a, FormElement::generator(space, 0), space.top_degree);
}

DeltaGerm integrate_component(const FormElement& f, const Pairing& pairing) {
  DeltaGerm g(f.space().jet.vars);
  for (const auto& [key, c] : f.terms()) {
    if (!key.alpha) continue;
    if (std::accumulate(key.exps.begin(), key.exps.end(), 0) != f.space().top_degree) continue;
    const auto it = pairing.find(key.exps);
    if (it == pairing.end()) {
      std::string mono;
      for (int e : key.exps) mono += (mono.empty() ? "" : ",") + std::to_string(e);
      throw DomainError("missing pairing entry for α∧[" + mono + "]");
    }
    g += c.to_germ() * it->second;
  }
  return g;
}

}  // namespace contact_index
