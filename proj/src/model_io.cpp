#include "contact_index/model_io.hpp"

#include <fstream>

#include "contact_index/errors.hpp"

namespace contact_index {

using nlohmann::json;

namespace {

json root_to_json(const ChernRoot& r) {
  json curv = json::array();
  for (const auto& c : r.curvature) curv.push_back(c.to_text());
  return {{"curv", curv}, {"weight", r.weight}, {"eig", to_string(r.eig)}};
}

json component_to_json(const FixedComponentData& c, const std::string& at) {
  json tan = json::array(), nor = json::array(), pairing = json::array();
  for (const auto& r : c.tangential_roots) tan.push_back(root_to_json(r));
  for (const auto& r : c.normal_roots) nor.push_back(root_to_json(r));
  for (const auto& [mono, v] : c.pairing) pairing.push_back({{"mono", mono}, {"value", v.to_text()}});
  return {{"at", at},
          {"dim", c.dim_odd},
          {"tangential_roots", tan},
          {"normal_roots", nor},
          {"moment", {{"mu", to_string(c.mu)}, {"reeb_weight", c.reeb_weight}}},
          {"pairing", pairing}};
}

// Field accessors that report the JSON path of what went wrong.
const json& field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ValidationError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(path.empty() ? std::string(key) : path + "." + key, "missing field");
  return *it;
}

long integer(const json& v, const std::string& path) {
  if (v.is_number_float()) throw ValidationError(path, "floats are not accepted; use exact integers");
  if (!v.is_number_integer()) throw ValidationError(path, "expected an integer");
  return v.get<long>();
}

Rational rational(const json& v, const std::string& path) {
  if (v.is_number_float()) throw ValidationError(path, "floats are not accepted; use a \"p/q\" string");
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (!v.is_string()) throw ValidationError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ValidationError(path, e.what());
  }
}

ExactScalar scalar(const json& v, const std::string& path) {
  if (v.is_number_float()) throw ValidationError(path, "floats are not accepted");
  if (v.is_number_integer()) return ExactScalar(v.get<long>());
  if (!v.is_string()) throw ValidationError(path, "expected a scalar string");
  const auto text = v.get<std::string>();
  try {
    return ExactScalar::parse(text);
  } catch (const ParseError&) {
  }
  try {
    return ExactScalar(parse_rational(text));
  } catch (const ParseError&) {
    throw ValidationError(path, "malformed scalar '" + text + "'");
  }
}

const json& array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ValidationError(path, "expected an array");
  return v;
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

std::vector<long> weights(const json& v, const std::string& path) {
  if (v.is_number()) return {integer(v, path)};
  std::vector<long> out;
  for (std::size_t i = 0; i < array(v, path).size(); ++i) out.push_back(integer(v[i], at(path, i)));
  return out;
}

TorsionPoint point(const json& v, const std::string& path) {
  try {
    if (v.is_string()) return parse_torsion_point(v.get<std::string>());
    std::vector<Rational> angles;
    for (std::size_t i = 0; i < array(v, path).size(); ++i) angles.push_back(rational(v[i], at(path, i)));
    return make_torsion_point(std::move(angles));
  } catch (const ParseError& e) {
    throw ValidationError(path, e.what());
  }
}

ChernRoot root_from_json(const json& v, const std::string& path, int generators) {
  ChernRoot r;
  const json& curv = field(v, "curv", path);
  for (std::size_t i = 0; i < array(curv, path + ".curv").size(); ++i) {
    r.curvature.push_back(scalar(curv[i], at(path + ".curv", i)));
  }
  if (r.curvature.size() != static_cast<std::size_t>(generators)) {
    throw ValidationError(path + ".curv", "expected " + std::to_string(generators) + " curvature entries");
  }
  r.weight = weights(field(v, "weight", path), path + ".weight");
  r.eig = v.contains("eig") ? rational(v["eig"], path + ".eig") : Rational(0);
  r.eig = make_torsion_point({r.eig})[0];
  return r;
}

FixedComponentData component_from_json(const json& v, const std::string& path, int generators) {
  FixedComponentData c;
  c.dim_odd = static_cast<int>(integer(field(v, "dim", path), path + ".dim"));
  const auto roots = [&](const char* key) {
    std::vector<ChernRoot> out;
    const std::string p = path + "." + key;
    if (!v.contains(key)) return out;
    for (std::size_t i = 0; i < array(v[key], p).size(); ++i) out.push_back(root_from_json(v[key][i], at(p, i), generators));
    return out;
  };
  c.tangential_roots = roots("tangential_roots");
  c.normal_roots = roots("normal_roots");
  const json& moment = field(v, "moment", path);
  c.mu = rational(field(moment, "mu", path + ".moment"), path + ".moment.mu");
  c.reeb_weight = weights(field(moment, "reeb_weight", path + ".moment"), path + ".moment.reeb_weight");
  const json& pairing = array(field(v, "pairing", path), path + ".pairing");
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    const std::string p = at(path + ".pairing", i);
    std::vector<int> mono;
    const json& mj = field(pairing[i], "mono", p);
    for (std::size_t j = 0; j < array(mj, p + ".mono").size(); ++j) {
      mono.push_back(static_cast<int>(integer(mj[j], at(p + ".mono", j))));
    }
    if (!c.pairing.emplace(mono, scalar(field(pairing[i], "value", p), p + ".value")).second) {
      throw ValidationError(p, "duplicate pairing monomial");
    }
  }
  return c;
}

}  // namespace

json model_to_json(const ContactModel& model) {
  json support = json::array(), comps = json::array();
  for (const auto& t : model.torsion_support) support.push_back(torsion_point_text(t));
  for (const auto& t : model.torsion_support) {
    const auto it = model.components.find(t);
    if (it == model.components.end()) continue;
    for (const auto& c : it->second) comps.push_back(component_to_json(c, torsion_point_text(t)));
  }
  for (const auto& c : model.generic_components) comps.push_back(component_to_json(c, "generic"));
  return {{"rank", model.rank},
          {"ambient_n", model.ambient_n},
          {"generators", model.generators},
          {"torsion_support", support},
          {"components", comps}};
}

ContactModel model_from_json(const json& doc) {
  ContactModel m;
  m.rank = static_cast<int>(integer(field(doc, "rank", ""), "rank"));
  m.ambient_n = static_cast<int>(integer(field(doc, "ambient_n", ""), "ambient_n"));
  m.generators = doc.contains("generators") ? static_cast<int>(integer(doc["generators"], "generators")) : 1;
  if (m.generators < 1) throw ValidationError("generators", "at least the dα generator is required");
  const json& support = array(field(doc, "torsion_support", ""), "torsion_support");
  for (std::size_t i = 0; i < support.size(); ++i) m.torsion_support.push_back(point(support[i], at("torsion_support", i)));
  const std::size_t listed = m.torsion_support.size();
  sort_support(m.torsion_support);
  if (m.torsion_support.size() != listed) throw ValidationError("torsion_support", "duplicate torsion point");
  const json& comps = array(field(doc, "components", ""), "components");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = at("components", i);
    const json& where = field(comps[i], "at", path);
    FixedComponentData c = component_from_json(comps[i], path, m.generators);
    if (where.is_string() && where.get<std::string>() == "generic") {
      m.generic_components.push_back(std::move(c));
    } else {
      m.components[point(where, path + ".at")].push_back(std::move(c));
    }
  }
  validate_model(m);
  return m;
}

ContactModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("", "cannot open model document " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("", "model document " + path.string() + " is not valid JSON: " + e.what());
  }
  return model_from_json(doc);
}

}  // namespace contact_index
