#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contact_index/engine.hpp"

namespace contact_index {

inline constexpr int kCalibrationVersion = 1;

/// All 8 combinations of Poisson sign, orientation sign and Todd direction.
std::vector<Conventions> all_conventions();

/// Circle c_m = 1 and hopf(1) c_m = sphere_char_oracle(1,1,m) for |m| ≤ 10.
/// `oracle_perturbation` is added to the hopf(1) oracle values (test hook).
bool anchors_pass(const Conventions& conv, long oracle_perturbation = 0);

/// The unique passing combination; CalibrationError if zero or several pass.
Conventions calibrate(long oracle_perturbation = 0);

nlohmann::json calibration_to_json(const Conventions& conv);
/// ValidationError on an unknown version or malformed fields.
Conventions calibration_from_json(const nlohmann::json& doc);

/// $CONTACT_INDEX_CALIBRATION, else ./contact_index_calibration.json.
std::filesystem::path calibration_path();
/// nullopt when the file does not exist.
std::optional<Conventions> read_calibration(const std::filesystem::path& path);

/// Writes to a sibling temporary file, then renames over the target.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace contact_index
