#include <doctest.h>

#include <cstdlib>
#include <string>

#include "contact_index/errors.hpp"
#include "contact_index/model_io.hpp"
#include "contact_index/oracle.hpp"

using namespace contact_index;
using nlohmann::json;

namespace {

std::string data_file(const std::string& name) { return std::string(CONTACT_INDEX_TEST_DATA) + "/" + name; }

const FixedComponentData& identity_component(const ContactModel& m) {
  return m.components.at(identity_point(m.rank)).front();
}

std::string validation_path(const json& doc) {
  try {
    model_from_json(doc);
  } catch (const ValidationError& e) {
    return e.path();
  }
  return "<valid>";
}

}  // namespace

TEST_CASE("circle preset") {
  const ContactModel m = preset_circle();
  CHECK(m.rank == 1);
  CHECK(m.torsion_support == std::vector<TorsionPoint>{{Rational(0)}});
  const auto& c = identity_component(m);
  CHECK(c.k() == 0);
  CHECK(c.tangential_roots.empty());
  CHECK(c.pairing.at({0}) == ExactScalar(2) * ExactScalar::pi());
  CHECK_NOTHROW(validate_model(m));
}

TEST_CASE("hopf spheres use the Stokes volume") {
  for (int n = 1; n <= 3; ++n) {
    const ContactModel m = preset_hopf_sphere(n);
    const auto& c = identity_component(m);
    CHECK(c.dim_odd == 2 * n + 1);
    CHECK(c.tangential_roots.size() == static_cast<std::size_t>(n + 1));
    CHECK(c.normal_roots.empty());
    // The Stokes integral with the orientation reversed in odd ball dimensions.
    CHECK(c.pairing.at({n}) == pow(ExactScalar(-1), n + 1) * ball_integral(n));
    CHECK(m.torsion_support.size() == 1);
    CHECK_NOTHROW(validate_model(m));
  }
  CHECK_THROWS_AS(preset_hopf_sphere(0), DomainError);
}

TEST_CASE("weighted sphere") {
  const ContactModel m = preset_weighted_s3(2, 3);
  // Identity, −1 (circle |z₁| = 1 when a = 2), and the cube roots.
  const std::vector<TorsionPoint> expected{
      {Rational(0)}, {frac(1, 2)}, {frac(1, 3)}, {frac(2, 3)}};
  CHECK(m.torsion_support == expected);
  CHECK(identity_component(m).pairing.at({1}) == weighted_s3_volume(2, 3));
  const auto& c = m.components.at({frac(1, 3)}).front();
  CHECK(c.dim_odd == 1);
  CHECK(c.normal_roots.size() == 1);
  CHECK(c.normal_roots[0].eig == frac(2, 3));  // weight 2 at angle 1/3
  CHECK_NOTHROW(validate_model(m));
  CHECK_THROWS_AS(preset_weighted_s3(2, 4), DomainError);
  CHECK_THROWS_AS(preset_weighted_s3(0, 1), DomainError);
  CHECK(preset_weighted_s3(1, 1).torsion_support.size() == 1);
}

TEST_CASE("prequantum projective space") {
  const ContactModel m = preset_prequantum_cpn(2);
  CHECK(m.rank == 2);
  CHECK(m.generic_components.size() == 3);
  for (const auto& f : m.generic_components) {
    CHECK(f.normal_roots.size() == 2);
    CHECK(f.k() == 0);
  }
  CHECK_NOTHROW(validate_model(m));
  // The principal circle alone sees the Hopf fibration.
  const ContactModel p = principal_projection(m);
  const ContactModel h = preset_hopf_sphere(2);
  CHECK(p.torsion_support == h.torsion_support);
  CHECK(identity_component(p).tangential_roots == identity_component(h).tangential_roots);
  CHECK(identity_component(p).pairing == identity_component(h).pairing);
  CHECK_THROWS_AS(principal_projection(h), UnsupportedError);
}

TEST_CASE("fixed_submodel") {
  const ContactModel m = preset_weighted_s3(3, 4);
  const ContactModel sub = fixed_submodel(m, {frac(5, 4)});
  CHECK(sub.torsion_support == std::vector<TorsionPoint>{{frac(1, 4)}});
  CHECK(sub.components.size() == 1);
  CHECK(fixed_submodel(m, {frac(1, 5)}).components.empty());
  CHECK(fixed_submodel(preset_hopf_sphere(1), {frac(1, 2)}).components.empty());
}

TEST_CASE("scale_contact_form") {
  const ContactModel m = preset_hopf_sphere(1);
  const ContactModel s = scale_contact_form(m, 3);
  CHECK(identity_component(s).mu == 3);
  CHECK(identity_component(s).pairing.at({1}) == ExactScalar(36) * ExactScalar::pi(2));
  CHECK(scale_contact_form(scale_contact_form(m, 5), frac(1, 5)) == m);
  CHECK_THROWS_AS(scale_contact_form(m, 0), DomainError);
}

TEST_CASE("model documents round trip") {
  for (const ContactModel& m : {preset_circle(), preset_hopf_sphere(2), preset_weighted_s3(3, 4), preset_prequantum_cpn(1)}) {
    const json doc = model_to_json(m);
    CHECK(model_from_json(doc) == m);
    CHECK(model_from_json(json::parse(doc.dump())) == m);
  }
}

TEST_CASE("hand-written model document") {
  CHECK(load_model(data_file("hopf_s5.json")) == preset_hopf_sphere(2));
  CHECK_THROWS_AS(load_model(data_file("does_not_exist.json")), ValidationError);
}

TEST_CASE("validation names the offending field") {
  const json good = model_to_json(preset_weighted_s3(1, 2));
  {
    json doc = good;
    doc["components"][0]["moment"]["mu"] = "-1";
    CHECK(validation_path(doc) == "components[0].moment.mu");
  }
  {
    json doc = good;
    doc["components"][0]["moment"]["mu"] = 1.5;
    CHECK(validation_path(doc) == "components[0].moment.mu");
  }
  {
    json doc = good;
    doc["components"][0]["moment"]["reeb_weight"] = json::array({0});
    CHECK(validation_path(doc) == "components[0].moment.reeb_weight");
  }
  {
    json doc = good;
    doc["components"][0]["tangential_roots"].erase(0);
    doc["components"][0]["tangential_roots"].erase(0);
    CHECK(validation_path(doc) == "components[0].tangential_roots");
  }
  {
    json doc = good;
    doc["components"][1]["normal_roots"][0]["eig"] = "1/3";
    CHECK(validation_path(doc) == "components[1].normal_roots[0].eig");
  }
  {
    json doc = good;
    doc["components"][0]["pairing"] = json::array();
    CHECK(validation_path(doc) == "components[0].pairing");
  }
  {
    json doc = good;
    doc.erase("rank");
    CHECK(validation_path(doc) == "rank");
  }
  {
    json doc = good;
    doc["torsion_support"] = json::array({"1/2"});
    CHECK(validation_path(doc) != "<valid>");
  }
  CHECK(validation_path(good) == "<valid>");
}

TEST_CASE("form_space") {
  const ContactModel m = preset_hopf_sphere(2);
  const FormSpace s = form_space(m, identity_component(m));
  CHECK(s.generators == 1);
  CHECK(s.top_degree == 2);
  CHECK(s.jet.vars == 1);
  CHECK(s.jet.order >= 2);
}
