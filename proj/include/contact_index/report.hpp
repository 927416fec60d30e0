#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contact_index/engine.hpp"

namespace contact_index {

struct Mismatch {
  long m;
  std::string engine;
  std::string oracle;
};

nlohmann::json quasi_polynomial_to_json(const QuasiPolynomial& q);
nlohmann::json germ_entry(const TorsionPoint& at, const DeltaGerm& g, int digits);

nlohmann::json germ_report(const std::string& model_id, const Conventions& conv,
                           const std::vector<std::pair<TorsionPoint, DeltaGerm>>& germs, int digits);

/// Coefficient table shared by engine and oracle outputs.
nlohmann::json coefficient_table(const std::map<long, ExactScalar>& coefficients, int digits);

/// Engine character against an optional oracle table (same m range).
nlohmann::json character_report(const std::string& model_id, const Conventions& conv, const CharacterResult& r,
                                int digits, const std::optional<std::map<long, Integer>>& oracle,
                                std::vector<Mismatch>* mismatches = nullptr);
std::string character_csv(const std::map<long, ExactScalar>& coefficients);

nlohmann::json corollary_report(const std::string& model_id, const Conventions& conv,
                                const std::map<long, LaurentPolynomial>& table, long max_k,
                                const std::optional<std::map<long, std::map<long, Integer>>>& oracle,
                                std::vector<Mismatch>* mismatches = nullptr);

/// Pretty-printed JSON with a trailing newline; keys sorted, so output is byte-stable.
std::string dump(const nlohmann::json& doc);

}  // namespace contact_index
