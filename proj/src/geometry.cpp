#include "contact_index/geometry.hpp"

#include <algorithm>
#include <numeric>

#include "contact_index/errors.hpp"

namespace contact_index {

namespace {

ChernRoot root(std::vector<long> weight, const Rational& eig = 0, int generators = 1) {
  return {std::vector<ExactScalar>(static_cast<std::size_t>(generators)), std::move(weight), eig};
}

// ⟨α∧(dα)^k⟩ over the unit sphere S^{2k+1}; magnitude from oracle ball_integral.
ExactScalar sphere_pairing(int k) { return ExactScalar(Rational(Integer(1) << (k + 1))) * ExactScalar::pi(k + 1); }

// Circle component {z_other = 0} of weighted S³ at e^{2πi p/w}: its length in α
// is 2π/w (orbit-length oracle), and g acts on the normal line with weight w_other.
FixedComponentData weighted_circle(long w, long w_other, const Rational& angle) {
  FixedComponentData c;
  c.dim_odd = 1;
  c.normal_roots.push_back(root({w_other}, make_torsion_point({angle * w_other})[0]));
  c.mu = 1;
  c.reeb_weight = {1};
  c.pairing[{0}] = ExactScalar(frac(2, w)) * ExactScalar::pi();
  return c;
}

std::vector<std::vector<int>> monomials(int generators, int degree) {
  if (generators == 1) return {{degree}};
  std::vector<std::vector<int>> out;
  for (int e = degree; e >= 0; --e) {
    for (auto rest : monomials(generators - 1, degree - e)) {
      rest.insert(rest.begin(), e);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

void validate_root(const ContactModel& m, const ChernRoot& r, const std::string& path, const TorsionPoint* at,
                   bool normal) {
  if (r.curvature.size() != static_cast<std::size_t>(m.generators)) {
    throw ValidationError(path + ".curv", "expected " + std::to_string(m.generators) + " curvature entries");
  }
  if (r.weight.size() != static_cast<std::size_t>(m.rank)) {
    throw ValidationError(path + ".weight", "expected " + std::to_string(m.rank) + " weight entries");
  }
  const Rational eig = make_torsion_point({r.eig})[0];
  if (at == nullptr) {
    if (eig != 0) throw ValidationError(path + ".eig", "generic components carry eig 0/1");
    return;
  }
  Rational expected = 0;
  for (std::size_t v = 0; v < r.weight.size(); ++v) expected += Rational(r.weight[v]) * (*at)[v];
  if (make_torsion_point({expected})[0] != eig) {
    throw ValidationError(path + ".eig", "eigenvalue angle " + to_string(eig) + " differs from ⟨weight, at⟩ = " +
                                             to_string(make_torsion_point({expected})[0]));
  }
  if (normal && eig == 0) {
    throw ValidationError(path + ".eig", "normal eigenvalue 1: the component is not the fixed set of its element");
  }
  if (!normal && eig != 0) throw ValidationError(path + ".eig", "tangential roots must have eigenvalue 1");
}

void validate_component(const ContactModel& m, const FixedComponentData& c, const std::string& path,
                        const TorsionPoint* at) {
  if (c.dim_odd < 1 || c.dim_odd % 2 == 0) throw ValidationError(path + ".dim", "dimension must be odd and positive");
  const int k = c.k();
  if (k > m.ambient_n) throw ValidationError(path + ".dim", "component larger than the manifold");
  const auto tan = static_cast<int>(c.tangential_roots.size());
  if (tan != k && tan != k + 1) {
    throw ValidationError(path + ".tangential_roots", "expected " + std::to_string(k) + " or " +
                                                          std::to_string(k + 1) + " roots, got " + std::to_string(tan));
  }
  if (static_cast<int>(c.normal_roots.size()) != m.ambient_n - k) {
    throw ValidationError(path + ".normal_roots", "expected n - k = " + std::to_string(m.ambient_n - k) +
                                                      " roots, got " + std::to_string(c.normal_roots.size()));
  }
  for (std::size_t i = 0; i < c.tangential_roots.size(); ++i) {
    validate_root(m, c.tangential_roots[i], idx(path + ".tangential_roots", i), at, false);
  }
  for (std::size_t i = 0; i < c.normal_roots.size(); ++i) {
    validate_root(m, c.normal_roots[i], idx(path + ".normal_roots", i), at, true);
  }
  if (c.mu <= 0) throw ValidationError(path + ".moment.mu", "ellipticity violated: μ must be positive");
  if (c.reeb_weight.size() != static_cast<std::size_t>(m.rank)) {
    throw ValidationError(path + ".moment.reeb_weight", "expected " + std::to_string(m.rank) + " entries");
  }
  if (std::all_of(c.reeb_weight.begin(), c.reeb_weight.end(), [](long w) { return w == 0; })) {
    throw ValidationError(path + ".moment.reeb_weight", "ellipticity violated: the moment pairing vanishes");
  }
  const auto expected = monomials(m.generators, k);
  for (const auto& [mono, v] : c.pairing) {
    if (std::find(expected.begin(), expected.end(), mono) == expected.end()) {
      throw ValidationError(path + ".pairing", "monomial of wrong length or degree (need total degree " +
                                                   std::to_string(k) + ")");
    }
  }
  for (const auto& mono : expected) {
    if (!c.pairing.contains(mono)) throw ValidationError(path + ".pairing", "missing a monomial of top degree");
  }
}

}  // namespace

TorsionPoint identity_point(int rank) { return TorsionPoint(static_cast<std::size_t>(rank), Rational(0)); }

void sort_support(std::vector<TorsionPoint>& support) {
  std::sort(support.begin(), support.end(), [](const TorsionPoint& a, const TorsionPoint& b) {
    const long oa = torsion_order(a), ob = torsion_order(b);
    return oa != ob ? oa < ob : a < b;
  });
  support.erase(std::unique(support.begin(), support.end()), support.end());
}

ContactModel preset_circle() {
  ContactModel m;
  m.rank = 1;
  m.ambient_n = 0;
  FixedComponentData c;
  c.dim_odd = 1;
  c.mu = 1;
  c.reeb_weight = {1};
  c.pairing[{0}] = ExactScalar(2) * ExactScalar::pi();  // circumference of the unit circle
  m.torsion_support = {identity_point(1)};
  m.components[identity_point(1)] = {c};
  return m;
}

ContactModel preset_hopf_sphere(int n) {
  if (n < 1) throw DomainError("Hopf sphere needs n >= 1");
  ContactModel m;
  m.rank = 1;
  m.ambient_n = n;
  FixedComponentData c;
  c.dim_odd = 2 * n + 1;
  // E ⊕ (Reeb line) = C^{n+1}|_{S^{2n+1}}: n+1 flat lines of weight 1.
  for (int j = 0; j <= n; ++j) c.tangential_roots.push_back(root({1}));
  c.mu = 1;
  c.reeb_weight = {1};
  c.pairing[{n}] = sphere_pairing(n);
  m.torsion_support = {identity_point(1)};
  m.components[identity_point(1)] = {c};
  return m;
}

ContactModel preset_weighted_s3(long a, long b) {
  if (a < 1 || b < 1) throw DomainError("weighted S3 needs positive weights");
  if (gcd(a, b) != 1) {
    throw DomainError("weights " + std::to_string(a) + "," + std::to_string(b) +
                      " are not coprime (orbifold strata are out of scope)");
  }
  ContactModel m;
  m.rank = 1;
  m.ambient_n = 1;
  FixedComponentData id;
  id.dim_odd = 3;
  id.tangential_roots = {root({a}), root({b})};
  id.mu = 1;
  id.reeb_weight = {1};
  // 4π²/(ab) from oracle weighted_s3_volume.
  id.pairing[{1}] = ExactScalar(frac(4, a * b)) * ExactScalar::pi(2);
  m.torsion_support = {identity_point(1)};
  m.components[identity_point(1)] = {id};
  const auto add_circles = [&m](long w, long w_other) {
    for (long p = 1; p < w; ++p) {
      const TorsionPoint at = make_torsion_point({frac(p, w)});
      m.torsion_support.push_back(at);
      m.components[at].push_back(weighted_circle(w, w_other, at[0]));
    }
  };
  add_circles(a, b);
  add_circles(b, a);
  sort_support(m.torsion_support);
  return m;
}

ContactModel preset_prequantum_cpn(int n) {
  if (n < 1) throw DomainError("prequantum CP^n needs n >= 1");
  // G rotates coordinate z_k of C^{n+1} with weight -k; the principal circle has weight 1.
  ContactModel m;
  m.rank = 2;
  m.ambient_n = n;
  FixedComponentData id;
  id.dim_odd = 2 * n + 1;
  for (long k = 0; k <= n; ++k) id.tangential_roots.push_back(root({-k, 1}));
  id.mu = 1;
  id.reeb_weight = {0, 1};
  id.pairing[{n}] = sphere_pairing(n);
  m.torsion_support = {identity_point(2)};
  m.components[identity_point(2)] = {id};
  // A generic element of G fixes the fibers over the coordinate points of CP^n.
  for (long j = 0; j <= n; ++j) {
    FixedComponentData fiber;
    fiber.dim_odd = 1;
    for (long k = 0; k <= n; ++k) {
      if (k != j) fiber.normal_roots.push_back(root({j - k, 0}));
    }
    fiber.mu = 1;
    fiber.reeb_weight = {-j, 1};
    fiber.pairing[{0}] = ExactScalar(2) * ExactScalar::pi();  // the fiber is a unit circle
    m.generic_components.push_back(std::move(fiber));
  }
  return m;
}

ContactModel fixed_submodel(const ContactModel& model, const TorsionPoint& g0) {
  ContactModel sub;
  sub.rank = model.rank;
  sub.ambient_n = model.ambient_n;
  sub.generators = model.generators;
  const TorsionPoint at = make_torsion_point(g0);
  const auto it = model.components.find(at);
  if (it == model.components.end()) return sub;
  sub.torsion_support = {at};
  sub.components[at] = it->second;
  return sub;
}

ContactModel principal_projection(const ContactModel& model) {
  if (model.rank != 2) throw UnsupportedError("principal projection needs a rank-2 model");
  ContactModel out;
  out.rank = 1;
  out.ambient_n = model.ambient_n;
  out.generators = model.generators;
  const auto drop = [](std::vector<long> w) { return std::vector<long>{w.back()}; };
  for (const auto& [at, comps] : model.components) {
    if (at[0] != 0) continue;
    const TorsionPoint p{at[1]};
    out.torsion_support.push_back(p);
    for (auto c : comps) {
      for (auto& r : c.tangential_roots) r.weight = drop(r.weight);
      for (auto& r : c.normal_roots) r.weight = drop(r.weight);
      c.reeb_weight = drop(c.reeb_weight);
      out.components[p].push_back(std::move(c));
    }
  }
  sort_support(out.torsion_support);
  return out;
}

ContactModel scale_contact_form(const ContactModel& model, const Rational& lambda) {
  if (lambda <= 0) throw DomainError("contact form can only be scaled by a positive factor");
  const ExactScalar inv(Rational(1) / lambda);
  const auto scale = [&](FixedComponentData c) {
    c.mu *= lambda;
    for (auto* roots : {&c.tangential_roots, &c.normal_roots}) {
      for (auto& r : *roots) r.curvature[0] *= inv;
    }
    for (auto& [mono, v] : c.pairing) v *= pow(ExactScalar(lambda), mono[0] + 1);
    return c;
  };
  ContactModel out = model;
  for (auto& [at, comps] : out.components) {
    for (auto& c : comps) c = scale(c);
  }
  for (auto& c : out.generic_components) c = scale(c);
  return out;
}

void validate_model(const ContactModel& m) {
  if (m.rank != 1 && m.rank != 2) throw ValidationError("rank", "torus rank must be 1 or 2");
  if (m.ambient_n < 0) throw ValidationError("ambient_n", "must be nonnegative");
  if (m.generators < 1) throw ValidationError("generators", "at least the dα generator is required");
  for (std::size_t i = 0; i < m.torsion_support.size(); ++i) {
    if (m.torsion_support[i].size() != static_cast<std::size_t>(m.rank)) {
      throw ValidationError(idx("torsion_support", i), "expected one angle per torus factor");
    }
    if (!m.components.contains(m.torsion_support[i])) {
      throw ValidationError(idx("torsion_support", i), "listed point has no fixed components");
    }
  }
  if (std::find(m.torsion_support.begin(), m.torsion_support.end(), identity_point(m.rank)) ==
      m.torsion_support.end()) {
    throw ValidationError("torsion_support", "the identity must be listed");
  }
  std::size_t index = 0;
  for (const auto& [at, comps] : m.components) {
    if (std::find(m.torsion_support.begin(), m.torsion_support.end(), at) == m.torsion_support.end()) {
      throw ValidationError("components", "fixed set at " + torsion_point_text(at) + " is not in torsion_support");
    }
    for (const auto& c : comps) validate_component(m, c, idx("components", index++), &at);
  }
  if (m.rank == 1 && !m.generic_components.empty()) {
    throw ValidationError("components", "generic components need a rank-2 model");
  }
  for (const auto& c : m.generic_components) {
    const std::string path = idx("components", index++);
    validate_component(m, c, path, nullptr);
  }
}

FormSpace form_space(const ContactModel& model, const FixedComponentData& c) {
  // δ-derivatives reach order k, so jets of order k pair exactly.
  return {model.generators, c.k(), JetSpace{model.rank, c.k()}};
}

}  // namespace contact_index
