#include <doctest.h>

#include "contact_index/calibration.hpp"
#include "contact_index/engine.hpp"
#include "contact_index/errors.hpp"
#include "contact_index/oracle.hpp"

using namespace contact_index;

namespace {

const Conventions kConv{};
ExactScalar two_pi() { return ExactScalar(2) * ExactScalar::pi(); }
DeltaGerm d(int j, const ExactScalar& c, TorsionPoint at = {}) { return DeltaGerm::delta(1, {j, 0}, c, std::move(at)); }

}  // namespace

TEST_CASE("circle germ") {
  CHECK(germ_at(preset_circle(), {Rational(0)}, kConv) == d(0, two_pi()));
  CHECK(germ_at(preset_circle(), {frac(1, 2)}, kConv).is_zero());
}

TEST_CASE("hopf germ at the identity") {
  const DeltaGerm g = germ_at(preset_hopf_sphere(1), {Rational(0)}, kConv);
  CHECK(g == d(0, two_pi()) + d(1, two_pi() * ExactScalar::i()));
  CHECK(identity_germ(preset_hopf_sphere(1), kConv) == g);
}

TEST_CASE("a cohomologous tangential representative gives the same germ") {
  // One weight-0 line of curvature 2i·dα: Td = 1 + i·dα.
  ContactModel m = preset_hopf_sphere(1);
  auto& c = m.components.at({Rational(0)}).front();
  c.tangential_roots = {ChernRoot{{ExactScalar(2) * ExactScalar::i()}, {0}, 0}};
  CHECK_NOTHROW(validate_model(m));
  CHECK(germ_at(m, {Rational(0)}, kConv) == germ_at(preset_hopf_sphere(1), {Rational(0)}, kConv));
}

TEST_CASE("germs vanish off the torsion support") {
  const ContactModel h = preset_hopf_sphere(1);
  for (const auto& at : {frac(1, 2), frac(1, 4), frac(1, 3), frac(2, 7)}) {
    const DeltaGerm g = germ_at(h, {at}, kConv);
    CHECK(g.is_zero());
    CHECK(g.location() == TorsionPoint{at});
  }
}

TEST_CASE("weighted circle germs") {
  const ContactModel m = preset_weighted_s3(1, 2);
  // Circle {z₁ = 0} at −1: length 2π/2, normal weight 1, so (2π/2)/(1 − conj(−1)).
  CHECK(germ_at(m, {frac(1, 2)}, kConv) == d(0, ExactScalar::pi() * ExactScalar(frac(1, 2)), {frac(1, 2)}));
  const ContactModel w = preset_weighted_s3(2, 3);
  const ExactScalar zeta = ExactScalar::root_of_unity(frac(-2, 3));
  CHECK(germ_at(w, {frac(1, 3)}, kConv) ==
        d(0, two_pi() * ExactScalar(frac(1, 3)) * (ExactScalar(1) - zeta).inverse(), {frac(1, 3)}));
}

TEST_CASE("germ additivity over components") {
  const ContactModel m = preset_weighted_s3(3, 4);
  for (const auto& t : m.torsion_support) {
    const ContactModel sub = fixed_submodel(m, t);
    CHECK(germ_at(m, t, kConv) == germ_at(sub, t, kConv));
    DeltaGerm sum(1, t);
    for (const auto& c : m.components.at(t)) sum += component_germ(m, c, kConv).at(t);
    CHECK(germ_at(m, t, kConv) == sum);
  }
}

TEST_CASE("assembled characters") {
  const auto circle = assemble_character(preset_circle(), 50, kConv);
  for (const auto& [m, c] : circle.coefficients) CHECK(c == ExactScalar(1));
  CHECK(circle.non_integer.empty());
  CHECK(circle.fitted.period() == 1);

  const auto hopf = assemble_character(preset_hopf_sphere(1), 50, kConv);
  for (const auto& [m, c] : hopf.coefficients) CHECK(c == ExactScalar(1 - m));

  const auto w = assemble_character(preset_weighted_s3(2, 3), 100, kConv);
  CHECK(w.fitted.period() == 6);
  CHECK(w.non_integer.empty());
  for (const auto& [m, c] : w.coefficients) CHECK(c == ExactScalar(Rational(sphere_char_oracle(2, 3, m))));
  CHECK(w.fitted == w.total);
}

TEST_CASE("hopf(2) reproduces the Euler characteristics of projective space") {
  const auto r = assemble_character(preset_hopf_sphere(2), 30, kConv);
  for (const auto& [m, c] : r.coefficients) CHECK(c == ExactScalar(Rational(cpn_chi(2, -m))));
}

TEST_CASE("Duistermaat-Heckman transform") {
  CHECK(dh_fourier(preset_circle(), kConv) == d(0, two_pi()));
  CHECK(dh_fourier(preset_hopf_sphere(1), kConv) == d(1, two_pi() * ExactScalar::i()));
  for (long lambda : {2, 3, 5}) {
    CHECK(dh_fourier(scale_contact_form(preset_hopf_sphere(1), lambda), kConv) ==
          dh_fourier(preset_hopf_sphere(1), kConv));
  }
}

TEST_CASE("scaling invariance for every preset") {
  for (const ContactModel& m : {preset_circle(), preset_hopf_sphere(1), preset_hopf_sphere(2), preset_weighted_s3(1, 2),
                                preset_weighted_s3(2, 3), preset_weighted_s3(3, 4)}) {
    for (long lambda : {2, 3, 5}) {
      const ContactModel s = scale_contact_form(m, lambda);
      for (const auto& t : m.torsion_support) CHECK(germ_at(s, t, kConv) == germ_at(m, t, kConv));
    }
  }
}

TEST_CASE("rank-2 models go through the corollary") {
  const ContactModel m = preset_prequantum_cpn(1);
  CHECK_THROWS_AS(germ_at(m, {Rational(0), Rational(0)}, kConv), UnsupportedError);
  CHECK_THROWS_AS(assemble_character(m, 5, kConv), UnsupportedError);
  const auto table = corollary_expand(m, 20, kConv);
  CHECK(table.size() == 41);
  for (long mm = -20; mm <= 20; ++mm) {
    const auto expected = equivariant_s2_character(mm);
    const auto& got = table.at(mm);
    for (const auto& [w, mult] : expected) CHECK(got.coefficient(w) == Rational(mult));
    for (const auto& [w, c] : got.terms()) CHECK(expected.contains(w));
  }
  // Three sections of O(3), nothing in O(−1), one class in H¹(O(−2)).
  CHECK(table.at(3).terms().size() == 4);
  CHECK(table.at(-1).is_zero());
  CHECK(table.at(-2).evaluate_at_one() == -1);
}

TEST_CASE("corollary for CP^2 matches the equivariant character") {
  const auto table = corollary_expand(preset_prequantum_cpn(2), 8, kConv);
  for (long mm = -8; mm <= 8; ++mm) {
    LaurentPolynomial expected;
    for (const auto& [w, mult] : equivariant_cpn_character(2, mm)) expected += LaurentPolynomial::monomial(w, Rational(mult));
    CHECK(table.at(mm) == expected);
    CHECK(table.at(mm).evaluate_at_one() == Rational(cpn_chi(2, mm)));
  }
}

TEST_CASE("ellipticity and fixed-set errors surface") {
  ContactModel m = preset_circle();
  m.components.at({Rational(0)}).front().mu = 0;
  CHECK_THROWS_AS(germ_at(m, {Rational(0)}, kConv), EllipticityError);
  ContactModel w = preset_weighted_s3(1, 2);
  w.components.at({frac(1, 2)}).front().normal_roots[0].eig = 0;
  CHECK_THROWS_AS(germ_at(w, {frac(1, 2)}, kConv), FixedSetMismatchError);
}

TEST_CASE("calibration picks a single convention") {
  int passing = 0;
  for (const auto& c : all_conventions()) passing += anchors_pass(c) ? 1 : 0;
  CHECK(passing == 1);
  const Conventions c = calibrate();
  CHECK(c.poisson_sign == 1);
  CHECK(c.orientation_sign == 1);
  CHECK(c.todd == ToddDirection::OneMinusExpNeg);
  CHECK_THROWS_AS(calibrate(1), CalibrationError);
  CHECK(calibration_from_json(calibration_to_json(c)) == c);
  CHECK_THROWS_AS(calibration_from_json({{"version", 2}}), ValidationError);
}
