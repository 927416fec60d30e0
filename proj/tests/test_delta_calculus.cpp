#include <doctest.h>

#include "contact_index/delta_germ.hpp"
#include "contact_index/errors.hpp"

using namespace contact_index;

namespace {

DeltaGerm d(int j, const ExactScalar& c = 1) { return DeltaGerm::delta(1, {j, 0}, c); }
SmoothJet x(int order) { return SmoothJet::variable({1, order}, 0); }
SmoothJet one(int order) { return SmoothJet::constant({1, order}, 1); }
ExactScalar two_pi() { return ExactScalar(2) * ExactScalar::pi(); }

}  // namespace

TEST_CASE("scale_variable") {
  CHECK(scale_variable(d(0), 2) == d(0, frac(1, 2)));
  CHECK(scale_variable(d(0), -1) == d(0));
  CHECK(scale_variable(d(1), -1) == d(1, -1));
  CHECK(scale_variable(d(2), frac(-1, 3)) == d(2, 27));
  CHECK_THROWS_AS(scale_variable(d(0), 0), EllipticityError);
}

TEST_CASE("multiply_smooth") {
  CHECK(multiply_smooth(d(0), x(1)).is_zero());
  CHECK(multiply_smooth(d(1), x(1)) == d(0, -1));
  CHECK(multiply_smooth(d(0), one(1) + x(1)) == d(0));
  // x²·δ″ = 2δ
  CHECK(multiply_smooth(d(2), x(2) * x(2)) == d(0, 2));
  CHECK_THROWS_AS(multiply_smooth(d(3), x(2)), TruncationError);
}

TEST_CASE("two-variable germs are tensor products") {
  const DeltaGerm g = tensor(d(1, 2), d(2, 3));
  CHECK(g.vars() == 2);
  CHECK(g.coefficient({1, 2}) == ExactScalar(6));
  const SmoothJet y = SmoothJet::variable({2, 3}, 1);
  // y·δ'(x)δ''(y) = δ'(x)·(−2δ'(y))
  CHECK(multiply_smooth(g, y) == tensor(d(1, 2), d(1, -6)));
  CHECK(scale_variable(g, -1, 0) == tensor(d(1, -2), d(2, 3)));
}

TEST_CASE("pullback through affine arguments") {
  CHECK(pullback_affine(d(0), {{-1}, 0}) == d(0));
  CHECK(pullback_affine(d(1), {{-1}, 0}) == d(1, -1));
  CHECK(pullback_affine(d(0), {{2}, 1}).is_zero());
  CHECK(pullback_affine(d(0), {{0}, 3}).is_zero());
  CHECK_THROWS_AS(pullback_affine(d(0), {{0}, 0}), EllipticityError);
  CHECK_THROWS_AS(pullback_affine(DeltaGerm::delta(2, {0, 0}, 1), {{1, 1}, 0}), UnsupportedError);
}

TEST_CASE("fourier_contribution") {
  const auto circle = fourier_contribution(d(0, two_pi()), 1);
  for (long m = -5; m <= 5; ++m) CHECK(circle.evaluate(m) == ExactScalar(1));
  CHECK(fourier_contribution(DeltaGerm(1), 1).is_zero());
  // 2π(δ + iδ') ↦ 1 − m with s = +1 and 1 + m with s = −1.
  const DeltaGerm hopf = d(0, two_pi()) + d(1, two_pi() * ExactScalar::i());
  for (long m = -5; m <= 5; ++m) {
    CHECK(fourier_contribution(hopf, 1).evaluate(m) == ExactScalar(1 - m));
    CHECK(fourier_contribution(hopf, -1).evaluate(m) == ExactScalar(1 + m));
  }
  // A germ at −1 alternates.
  const auto alt = fourier_contribution(d(0, two_pi()).at({frac(1, 2)}), 1);
  CHECK(alt.period() == 2);
  CHECK(alt.evaluate(3) == ExactScalar(-1));
  CHECK(alt.evaluate(-4) == ExactScalar(1));
}

TEST_CASE("pair_with_trig") {
  CHECK(pair_with_trig(d(0), {{4, 1}}) == ExactScalar(1));
  CHECK(pair_with_trig(d(1), {{4, 1}}) == ExactScalar(-4) * ExactScalar::i());
  std::map<long, ExactScalar> p;
  for (long m = -3; m <= 3; ++m) p[m] = 1;
  CHECK(pair_with_trig(d(0, two_pi()), p) == ExactScalar(14) * ExactScalar::pi());
}

TEST_CASE("germ serialization round trip") {
  const DeltaGerm g = (d(0, ExactScalar::root_of_unity(frac(1, 3))) + d(4, frac(-2, 9))).at({frac(2, 3)});
  const auto doc = g.to_json();
  CHECK(doc["location"] == "e^{2πi·2/3}");
  CHECK(DeltaGerm::from_json(doc) == g);
  const DeltaGerm t = tensor(d(1, 2), d(0, ExactScalar::i()));
  CHECK(DeltaGerm::from_json(t.to_json()) == t);
  CHECK_THROWS_AS(DeltaGerm::from_json(nlohmann::json{{"vars", 1}, {"location", "e^{2πi·x}"}, {"terms", {}}}),
                  ParseError);
}

TEST_CASE("torsion points") {
  CHECK(parse_torsion_point("5/4") == TorsionPoint{frac(1, 4)});
  CHECK(parse_torsion_point("-1/3") == TorsionPoint{frac(2, 3)});
  CHECK(torsion_point_text({Rational(0)}) == "0/1");
  CHECK(torsion_order({frac(1, 4), frac(1, 6)}) == 12);
  CHECK_THROWS_AS(parse_torsion_point("a/b"), ParseError);
}

TEST_CASE("germ arithmetic guards") {
  CHECK_THROWS_AS(d(0) + d(0).at({frac(1, 2)}), DomainError);
  CHECK((d(1) - d(1)).is_zero());
  CHECK(d(3).max_order() == 3);
  CHECK(DeltaGerm(1).max_order() == -1);
}
