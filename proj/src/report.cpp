#include "contact_index/report.hpp"

#include "contact_index/calibration.hpp"

namespace contact_index {

using nlohmann::json;

namespace {

std::string value_text(const ExactScalar& c) {
  const auto r = c.as_rational();
  return r ? to_string(*r) : c.to_text();
}

std::string laurent_row_text(const std::map<long, Integer>& weights) {
  std::string out;
  for (const auto& [w, mult] : weights) out += (out.empty() ? "" : " ") + mult.get_str() + "·h^" + std::to_string(w);
  return out.empty() ? "0" : out;
}

}  // namespace

json quasi_polynomial_to_json(const QuasiPolynomial& q) {
  json polys = json::array();
  for (const auto& p : q.polys()) {
    json row = json::array();
    for (const auto& c : p) row.push_back(c.to_text());
    polys.push_back(row);
  }
  return {{"period", q.period()}, {"polys", polys}};
}

json germ_entry(const TorsionPoint& at, const DeltaGerm& g, int digits) {
  json approx = json::array();
  for (const auto& [k, c] : g.terms()) approx.push_back({{"derivative_order", k[0]}, {"approx", c.approx(digits)}});
  return {{"at", torsion_point_text(at)}, {"germ", g.to_json()}, {"approx", approx}};
}

json germ_report(const std::string& model_id, const Conventions& conv,
                 const std::vector<std::pair<TorsionPoint, DeltaGerm>>& germs, int digits) {
  json list = json::array();
  for (const auto& [at, g] : germs) list.push_back(germ_entry(at, g, digits));
  return {{"model_id", model_id}, {"calibration", calibration_to_json(conv)}, {"germs", list}};
}

json coefficient_table(const std::map<long, ExactScalar>& coefficients, int digits) {
  json rows = json::array();
  for (const auto& [m, c] : coefficients) rows.push_back({{"m", m}, {"value", value_text(c)}, {"approx", c.approx(digits)}});
  return rows;
}

json character_report(const std::string& model_id, const Conventions& conv, const CharacterResult& r, int digits,
                      const std::optional<std::map<long, Integer>>& oracle, std::vector<Mismatch>* mismatches) {
  json germs = json::array();
  for (const auto& [at, g] : r.germs) germs.push_back(germ_entry(at, g, digits));
  json doc = {{"model_id", model_id},
              {"calibration", calibration_to_json(conv)},
              {"germs", germs},
              {"coefficients", coefficient_table(r.coefficients, digits)},
              {"quasi_polynomial", quasi_polynomial_to_json(r.fitted.canonical())},
              {"non_integer", r.non_integer}};
  if (!oracle) {
    doc["oracle_match"] = nullptr;
    doc["mismatches"] = json::array();
    return doc;
  }
  json list = json::array();
  for (const auto& [m, c] : r.coefficients) {
    const auto it = oracle->find(m);
    const std::string expected = it == oracle->end() ? "missing" : it->second.get_str();
    if (it != oracle->end() && c == ExactScalar(Rational(it->second))) continue;
    list.push_back({{"m", m}, {"engine", value_text(c)}, {"oracle", expected}});
    if (mismatches != nullptr) mismatches->push_back({m, value_text(c), expected});
  }
  doc["oracle_match"] = list.empty();
  doc["mismatches"] = list;
  return doc;
}

std::string character_csv(const std::map<long, ExactScalar>& coefficients) {
  std::string out = "m,value\n";
  for (const auto& [m, c] : coefficients) out += std::to_string(m) + "," + value_text(c) + "\n";
  return out;
}

json corollary_report(const std::string& model_id, const Conventions& conv,
                      const std::map<long, LaurentPolynomial>& table, long max_k,
                      const std::optional<std::map<long, std::map<long, Integer>>>& oracle,
                      std::vector<Mismatch>* mismatches) {
  json rows = json::array(), list = json::array();
  for (const auto& [m, f] : table) {
    json weights = json::array();
    std::map<long, Integer> shown;
    bool truncated = false;
    for (const auto& [w, c] : f.terms()) {
      if (w < -max_k || w > max_k) {
        truncated = true;
        continue;
      }
      weights.push_back({{"weight", w}, {"multiplicity", to_string(c)}});
      if (c.get_den() == 1) shown[w] = c.get_num();
    }
    rows.push_back({{"m", m}, {"weights", weights}, {"truncated", truncated}, {"dimension", to_string(f.evaluate_at_one())}});
    if (!oracle) continue;
    std::map<long, Integer> expected;
    if (const auto it = oracle->find(m); it != oracle->end()) {
      for (const auto& [w, c] : it->second) {
        if (w >= -max_k && w <= max_k) expected[w] = c;
      }
    }
    bool exact = true;
    for (const auto& [w, c] : f.terms()) exact = exact && c.get_den() == 1;
    if (exact && shown == expected) continue;
    list.push_back({{"m", m}, {"engine", f.to_text()}, {"oracle", laurent_row_text(expected)}});
    if (mismatches != nullptr) mismatches->push_back({m, f.to_text(), laurent_row_text(expected)});
  }
  json doc = {{"model_id", model_id}, {"calibration", calibration_to_json(conv)}, {"max_k", max_k}, {"rows", rows}};
  doc["oracle_match"] = oracle ? json(list.empty()) : json(nullptr);
  doc["mismatches"] = list;
  return doc;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace contact_index
