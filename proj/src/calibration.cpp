#include "contact_index/calibration.hpp"

#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "contact_index/errors.hpp"
#include "contact_index/oracle.hpp"

namespace contact_index {

namespace {

constexpr long kAnchorRange = 10;

bool matches(const CharacterResult& r, const auto& expected) {
  for (const auto& [m, c] : r.coefficients) {
    if (!(c == ExactScalar(Rational(expected(m))))) return false;
  }
  return true;
}

}  // namespace

std::vector<Conventions> all_conventions() {
  std::vector<Conventions> out;
  for (int s : {1, -1}) {
    for (int o : {1, -1}) {
      for (auto t : {ToddDirection::OneMinusExpNeg, ToddDirection::ExpMinusOne}) out.push_back({s, o, t});
    }
  }
  return out;
}

bool anchors_pass(const Conventions& conv, long oracle_perturbation) {
  const auto circle = assemble_character(preset_circle(), kAnchorRange, conv);
  if (!matches(circle, [](long) { return Integer(1); })) return false;
  const auto hopf = assemble_character(preset_hopf_sphere(1), kAnchorRange, conv);
  return matches(hopf, [&](long m) { return Integer(sphere_char_oracle(1, 1, m) + oracle_perturbation); });
}

Conventions calibrate(long oracle_perturbation) {
  std::vector<Conventions> passing;
  for (const auto& c : all_conventions()) {
    if (anchors_pass(c, oracle_perturbation)) passing.push_back(c);
  }
  if (passing.size() != 1) {
    throw CalibrationError(std::to_string(passing.size()) +
                           " of 8 convention combinations reproduce both anchors; expected exactly one");
  }
  return passing.front();
}

nlohmann::json calibration_to_json(const Conventions& conv) {
  return {{"version", kCalibrationVersion},
          {"poisson_sign", conv.poisson_sign},
          {"orientation_sign", conv.orientation_sign},
          {"todd_direction", to_string(conv.todd)}};
}

Conventions calibration_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("version").get<int>() != kCalibrationVersion) {
      throw ValidationError("version", "unsupported calibration record version; rerun calibrate");
    }
    Conventions c;
    c.poisson_sign = doc.at("poisson_sign").get<int>();
    c.orientation_sign = doc.at("orientation_sign").get<int>();
    c.todd = parse_todd_direction(doc.at("todd_direction").get<std::string>());
    if (std::abs(c.poisson_sign) != 1) throw ValidationError("poisson_sign", "must be +1 or -1");
    if (std::abs(c.orientation_sign) != 1) throw ValidationError("orientation_sign", "must be +1 or -1");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("", std::string("malformed calibration record: ") + e.what());
  } catch (const ParseError& e) {
    throw ValidationError("todd_direction", e.what());
  }
}

std::filesystem::path calibration_path() {
  if (const char* env = std::getenv("CONTACT_INDEX_CALIBRATION"); env != nullptr && *env != '\0') return env;
  return "contact_index_calibration.json";
}

std::optional<Conventions> read_calibration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    return calibration_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("", "calibration record " + path.string() + " is not valid JSON: " + e.what());
  }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  const auto tmp = dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("", "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ValidationError("", "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ValidationError("", "cannot replace " + path.string() + ": " + ec.message());
  }
}

}  // namespace contact_index
