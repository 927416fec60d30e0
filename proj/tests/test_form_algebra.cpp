#include <doctest.h>

#include "contact_index/errors.hpp"
#include "contact_index/form_algebra.hpp"

using namespace contact_index;

namespace {

FormSpace space(int k, int order = -1) { return {1, k, JetSpace{1, order < 0 ? k : order}}; }

ChernRoot flat_root(long w) { return {{ExactScalar(0)}, {w}, 0}; }

// Σ_j coefficient_j·δ^{(j)} as an α-term of degree `deg` in dα.
FormElement alpha_delta(const FormSpace& s, int deg, const DeltaGerm& g) {
  FormElement f(s);
  for (const auto& [k, c] : g.terms()) {
    f += FormElement::term(s, {true, {deg}}, GeneralizedCoefficient::delta(k, SmoothJet::constant(s.jet, c)));
  }
  return f;
}

DeltaGerm d(int j, const ExactScalar& c = 1) { return DeltaGerm::delta(1, {j, 0}, c); }

}  // namespace

TEST_CASE("todd series") {
  const FormSpace s1 = space(1);
  CHECK(todd({}, s1, ToddDirection::OneMinusExpNeg) == FormElement::one(s1));
  // Curvature 2i·dα with weight 0 gives 1 + i·dα.
  const ChernRoot curved{{ExactScalar(2) * ExactScalar::i()}, {0}, 0};
  CHECK(todd({curved}, s1, ToddDirection::OneMinusExpNeg) ==
        FormElement::one(s1) + FormElement::generator(s1, 0) * ExactScalar::i());
  // Curvature c: 1 + c/2 + c²/12 and 1 − c/2 + c²/12.
  const FormSpace s2 = space(2, 0);
  const ChernRoot c{{ExactScalar(3)}, {0}, 0};
  const FormElement g = FormElement::generator(s2, 0);
  CHECK(todd({c}, s2, ToddDirection::OneMinusExpNeg) ==
        FormElement::one(s2) + g * ExactScalar(frac(3, 2)) + g * g * ExactScalar(frac(9, 12)));
  CHECK(todd({c}, s2, ToddDirection::ExpMinusOne) ==
        FormElement::one(s2) - g * ExactScalar(frac(3, 2)) + g * g * ExactScalar(frac(9, 12)));
}

TEST_CASE("todd is multiplicative") {
  const FormSpace s = space(2, 3);
  const ChernRoot a{{ExactScalar(frac(1, 2))}, {3}, 0};
  const ChernRoot b{{ExactScalar(-1)}, {-2}, 0};
  for (auto dir : {ToddDirection::OneMinusExpNeg, ToddDirection::ExpMinusOne}) {
    CHECK(todd({a, b}, s, dir) == todd({a}, s, dir) * todd({b}, s, dir));
  }
}

TEST_CASE("dC_inverse") {
  const FormSpace s0 = space(0);
  CHECK(dC_inverse({}, s0) == FormElement::one(s0));
  // λ = −1, value ibφ: (1 + e^{−ibφ})^{-1} = 1/2 + (ib/4)φ.
  const FormSpace s = space(0, 1);
  const long b = 3;
  const ChernRoot r{{ExactScalar(0)}, {b}, frac(1, 2)};
  const SmoothJet phi = SmoothJet::variable(s.jet, 0);
  CHECK(dC_inverse({r}, s) ==
        FormElement::scalar(s, frac(1, 2)) + FormElement::jet(s, phi * (ExactScalar(frac(b, 4)) * ExactScalar::i())));
  // λ = ζ₃, zero jet: 1/(1 − conj(ζ₃)).
  const ChernRoot z{{ExactScalar(0)}, {1}, frac(1, 3)};
  const ExactScalar expected = (ExactScalar(1) - ExactScalar::root_of_unity(frac(-1, 3))).inverse();
  CHECK(dC_inverse({z}, s0) == FormElement::scalar(s0, expected));
  CHECK(dC_inverse({z}, s0) * FormElement::scalar(s0, ExactScalar(1) - ExactScalar::root_of_unity(frac(-1, 3))) ==
        FormElement::one(s0));
  CHECK_THROWS_AS(dC_inverse({flat_root(0)}, s0), FixedSetMismatchError);
}

TEST_CASE("dC_inverse times the determinant is one") {
  const FormSpace s = space(2, 2);
  const ChernRoot r{{ExactScalar(frac(2, 3))}, {2}, frac(1, 5)};
  const auto exp_c = exp_coefficients(nilpotency_bound(s));
  const ExactScalar mu = ExactScalar::root_of_unity(frac(-1, 5));
  const FormElement det =
      FormElement::one(s) - apply_series(exp_c, equivariant_value(r, s) * ExactScalar(-1)) * mu;
  CHECK(dC_inverse({r}, s) * det == FormElement::one(s));
}

TEST_CASE("j_form") {
  const FormSpace s1 = space(1);
  // α∧δ₀(dα − φ) = α∧(δ − δ'·dα)
  CHECK(j_form(1, {1}, s1) == alpha_delta(s1, 0, d(0)) + alpha_delta(s1, 1, d(1, -1)));
  const FormSpace s0 = space(0);
  CHECK(j_form(1, {1}, s0) == alpha_delta(s0, 0, d(0)));
  CHECK(j_form(1, {-1}, s0) == alpha_delta(s0, 0, d(0)));
  CHECK_THROWS_AS(j_form(0, {1}, s0), EllipticityError);
  CHECK_THROWS_AS(j_form(-2, {1}, s0), EllipticityError);
  CHECK_THROWS_AS(j_form(1, {0}, s0), EllipticityError);
}

TEST_CASE("pullback with a nilpotent part") {
  const FormSpace s2 = space(2);
  const FormElement g = FormElement::generator(s2, 0);
  const auto delta_term = [&](int deg, const DeltaGerm& germ) {
    FormElement f(s2);
    for (const auto& [k, c] : germ.terms()) {
      f += FormElement::term(s2, {false, {deg}}, GeneralizedCoefficient::delta(k, SmoothJet::constant(s2.jet, c)));
    }
    return f;
  };
  // δ(2dα − φ) = δ − 2δ'·dα + 2δ''·dα²
  CHECK(pullback_affine_nilpotent(d(0), {{-1}, 0}, g * ExactScalar(2), 2) ==
        delta_term(0, d(0)) + delta_term(1, d(1, -2)) + delta_term(2, d(2, 2)));
  CHECK(pullback_affine_nilpotent(d(0), {{-1}, 0}, FormElement(s2), 2) == delta_term(0, d(0)));
  CHECK_THROWS_AS(pullback_affine_nilpotent(d(0), {{0}, 0}, g, 2), EllipticityError);
}

TEST_CASE("multiply") {
  const FormSpace s = space(1);
  const FormElement a = FormElement::alpha(s);
  CHECK((a * a).is_zero());
  const FormElement x = FormElement::jet(s, SmoothJet::variable(s.jet, 0));
  CHECK(x * FormElement::one(s) == x);
  // (1 + i dα)·α∧(δ − δ'dα) = α∧δ + α∧dα·(iδ − δ')
  const FormElement todd_form = FormElement::one(s) + FormElement::generator(s, 0) * ExactScalar::i();
  const FormElement product = todd_form * j_form(1, {1}, s);
  CHECK(product == alpha_delta(s, 0, d(0)) + alpha_delta(s, 1, d(0, ExactScalar::i()) + d(1, -1)));
  CHECK(product.terms().size() == 2);
  CHECK_THROWS_AS(FormElement::one(space(1)) * FormElement::one(space(2)), DomainError);
}

TEST_CASE("truncation is consistent with multiplication") {
  const FormSpace big = space(4, 2);
  const FormSpace small = space(2, 2);
  const auto build = [](const FormSpace& s) {
    const FormElement g = FormElement::generator(s, 0);
    const FormElement x = FormElement::jet(s, SmoothJet::variable(s.jet, 0));
    return std::pair{FormElement::one(s) + g * ExactScalar(3) + g * g * x,
                     g * g * g + x * ExactScalar::i() + FormElement::alpha(s) * g};
  };
  const auto [a, b] = build(big);
  const auto [as, bs] = build(small);
  // Truncating the degree-4 product to degree 2 equals the product computed at degree 2.
  FormElement truncated(small);
  const FormElement product = a * b;
  for (const auto& [key, c] : product.terms()) {
    int deg = 0;
    for (int e : key.exps) deg += e;
    if (deg > 2) continue;
    truncated += FormElement::term(small, key, c);
  }
  CHECK(truncated == as * bs);
}

TEST_CASE("integrate_component") {
  const FormSpace s = space(1);
  const Pairing pairing{{{1}, ExactScalar(4) * ExactScalar::pi(2)}};
  const FormElement integrand =
      todd({flat_root(1), flat_root(1)}, s, ToddDirection::OneMinusExpNeg) * j_form(1, {1}, s);
  const DeltaGerm g = integrate_component(integrand, pairing) * ExactScalar::two_pi_i(-1);
  const ExactScalar two_pi = ExactScalar(2) * ExactScalar::pi();
  CHECK(g == d(0, two_pi) + d(1, two_pi * ExactScalar::i()));
  CHECK(integrate_component(FormElement(s), pairing).is_zero());
  const FormSpace s0 = space(0);
  CHECK(integrate_component(j_form(1, {1}, s0), {{{0}, two_pi}}) == d(0, two_pi));
  CHECK_THROWS_AS(integrate_component(j_form(1, {1}, s), {}), DomainError);
}

TEST_CASE("contact form scaling leaves the integral unchanged") {
  const FormSpace s = space(2);
  const ChernRoot r{{ExactScalar(frac(1, 2))}, {1}, 0};
  const ChernRoot n{{ExactScalar(0)}, {2}, frac(1, 3)};
  const Pairing pairing{{{2}, ExactScalar(7) * ExactScalar::pi(3)}};
  const auto run = [&](const Rational& lambda) {
    ChernRoot rs = r;
    rs.curvature[0] *= ExactScalar(Rational(1) / lambda);
    Pairing ps = pairing;
    for (auto& [mono, v] : ps) v *= pow(ExactScalar(lambda), mono[0] + 1);
    const FormElement f = todd({rs}, s, ToddDirection::OneMinusExpNeg) * j_form(frac(3, 2) * lambda, {2}, s) *
                          dC_inverse({n}, s);
    return integrate_component(f, ps);
  };
  for (long lambda : {2, 3, 5}) CHECK(run(lambda) == run(1));
}

TEST_CASE("delta times delta is rejected") {
  const JetSpace j{1, 1};
  const auto a = GeneralizedCoefficient::delta({0, 0}, SmoothJet::constant(j, 1));
  CHECK_THROWS_AS(a * a, DomainError);
  CHECK_THROWS_AS(GeneralizedCoefficient::smooth(SmoothJet::constant(j, 1)).to_germ(), DomainError);
}
