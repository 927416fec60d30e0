#include "contact_index/engine.hpp"

#include <algorithm>

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

void require_rank_one(const ContactModel& model, const char* what) {
  if (model.rank != 1) {
    throw UnsupportedError(std::string(what) + " is implemented for rank-1 models; use the corollary expansion for "
                                               "rank-2 prequantum models");
  }
}

}  // namespace

DeltaGerm component_germ(const ContactModel& model, const FixedComponentData& c, const Conventions& conv,
                         bool with_todd) {
  const FormSpace space = form_space(model, c);
  FormElement integrand = j_form(c.mu, c.reeb_weight, space);
  if (with_todd) integrand *= todd(c.tangential_roots, space, conv.todd);
  integrand *= dC_inverse(c.normal_roots, space);
  return integrate_component(integrand, c.pairing) * (ExactScalar::two_pi_i(-c.k()) * ExactScalar(conv.orientation_sign));
}

DeltaGerm germ_at(const ContactModel& model, const TorsionPoint& g0, const Conventions& conv) {
  require_rank_one(model, "germ evaluation");
  if (g0.size() != 1) throw DomainError("a rank-1 germ needs one angle");
  const TorsionPoint at = make_torsion_point(g0);
  const ContactModel sub = fixed_submodel(model, at);
  DeltaGerm g(1, at);
  const auto it = sub.components.find(at);
  if (it == sub.components.end()) return g;
  for (const auto& c : it->second) g += component_germ(model, c, conv).at(at);
  return g;
}

DeltaGerm identity_germ(const ContactModel& model, const Conventions& conv) {
  require_rank_one(model, "germ evaluation");
  const TorsionPoint at = identity_point(1);
  DeltaGerm g(1, at);
  const auto it = model.components.find(at);
  if (it == model.components.end()) return g;
  for (const auto& c : it->second) {
    if (!c.normal_roots.empty()) throw FixedSetMismatchError("identity component with normal roots");
    g += component_germ(model, c, conv);
  }
  return g;
}

DeltaGerm dh_fourier(const ContactModel& model, const Conventions& conv) {
  require_rank_one(model, "the Duistermaat-Heckman transform");
  const TorsionPoint at = identity_point(1);
  DeltaGerm g(1, at);
  const auto it = model.components.find(at);
  if (it == model.components.end()) return g;
  for (const auto& c : it->second) g += component_germ(model, c, conv, false);
  return g;
}

CharacterResult assemble_character(const ContactModel& model, long max_m, const Conventions& conv) {
  require_rank_one(model, "character assembly");
  if (max_m < 1) throw DomainError("max_m must be at least 1");
  CharacterResult out;
  long period = 1;
  for (const auto& t : model.torsion_support) {
    DeltaGerm g = germ_at(model, t, conv);
    out.total += fourier_contribution(g, conv.poisson_sign);
    period = lcm(period, torsion_order(t));
    out.germs.emplace_back(t, std::move(g));
  }
  for (long m = -max_m; m <= max_m; ++m) {
    ExactScalar c = out.total.evaluate(m);
    const auto r = c.as_rational();
    if (!r || r->get_den() != 1) out.non_integer.push_back(m);
    out.coefficients.emplace(m, std::move(c));
  }
  // Fit window: |m| ≤ max_m, widened so each residue class holds degree+2 samples.
  const int degree = model.ambient_n;
  const long window = std::max(max_m, period * (degree + 2));
  std::map<long, ExactScalar> samples;
  for (long m = -window; m <= window; ++m) {
    const auto it = out.coefficients.find(m);
    samples.emplace(m, it != out.coefficients.end() ? it->second : out.total.evaluate(m));
  }
  out.fitted = fit_quasi_polynomial(samples, static_cast<int>(period), degree);
  return out;
}

std::map<long, LaurentPolynomial> corollary_expand(const ContactModel& model, long max_m, const Conventions& conv) {
  if (model.rank != 2 || model.generic_components.empty()) {
    throw UnsupportedError("the corollary expansion needs a rank-2 model with generic fixed components");
  }
  if (max_m < 0) throw DomainError("max_m must be nonnegative");
  // A generic h ∈ G fixes each component pointwise together with u = h^{-Φ},
  // Φ the G-part of its Reeb weight. The germ there is c·δ(θ) and Poisson
  // summation gives c_{m'}(h) = h^{sΦm'}·(c/2π)/∏(1 − h^{-e}), with
  // e = w_G − Φ·w_P the weight of each normal line at that point.
  struct Term {
    long phi;
    Rational weight;
    LaurentPolynomial denominator;
  };
  std::vector<Term> terms;
  for (const auto& c : model.generic_components) {
    if (c.k() != 0) throw UnsupportedError("generic fixed components must be circles");
    if (c.reeb_weight.size() != 2 || c.reeb_weight[1] != 1) {
      throw UnsupportedError("generic fixed components must be principal fibers (Reeb weight (Φ, 1))");
    }
    const long phi = c.reeb_weight[0];
    const FormSpace fiber{model.generators, 0, JetSpace{1, 0}};
    const DeltaGerm g = integrate_component(j_form(c.mu, {1}, fiber), c.pairing) * ExactScalar(conv.orientation_sign);
    const auto w = (g.coefficient({0, 0}) * ExactScalar(frac(1, 2)) * ExactScalar::pi(-1)).as_rational();
    if (!w || g.max_order() != 0) throw UnsupportedError("fiber pairing is not a rational multiple of 2π");
    LaurentPolynomial den(1);
    for (const auto& r : c.normal_roots) {
      if (r.curvature[0] != ExactScalar(0)) throw UnsupportedError("curved normal roots on a generic fiber");
      const long e = r.weight[0] - phi * r.weight[1];
      if (e == 0) throw FixedSetMismatchError("a generic element fixes a normal direction of a fiber");
      den *= LaurentPolynomial(1) - LaurentPolynomial::monomial(-e);
    }
    terms.push_back({phi, *w, std::move(den)});
  }
  LaurentPolynomial common(1);
  for (const auto& t : terms) common *= t.denominator;
  std::vector<LaurentPolynomial> cofactors;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    LaurentPolynomial p(terms[j].weight);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i != j) p *= terms[i].denominator;
    }
    cofactors.push_back(std::move(p));
  }
  std::map<long, LaurentPolynomial> out;
  for (long m = -max_m; m <= max_m; ++m) {
    // ind^G(σ_m) is the coefficient of u^{-m}, i.e. c_{-m}.
    const long mp = -m;
    LaurentPolynomial num;
    for (std::size_t j = 0; j < terms.size(); ++j) {
      num += LaurentPolynomial::monomial(conv.poisson_sign * terms[j].phi * mp) * cofactors[j];
    }
    out.emplace(m, divide_exact(num, common));
  }
  return out;
}

}  // namespace contact_index
