#pragma once

#include <filesystem>

#include <json.hpp>

#include "contact_index/geometry.hpp"

namespace contact_index {

/// Canonical document: components sorted by torsion point, generic ones last.
nlohmann::json model_to_json(const ContactModel& model);
/// Parses and validates; every failure is a ValidationError with a field path.
ContactModel model_from_json(const nlohmann::json& doc);
ContactModel load_model(const std::filesystem::path& path);

}  // namespace contact_index
