#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewlines/bracket.hpp"
#include "skewlines/classify.hpp"
#include "skewlines/geometry.hpp"

namespace skewlines {

/// {"lines": [{"point": [r,r,r], "direction": [r,r,r]}, ...], "points": [[r,r,r], ...]}
/// Rationals are integers or strings "p" / "p/q". Either key may be absent.
struct ConfigFile {
  std::optional<Configuration> lines;
  std::optional<PointSet> points;
};

/// Throws ParseError naming the offending entry, or the geometric validation error.
ConfigFile parse_config(const nlohmann::json& j);
ConfigFile read_config_file(const std::filesystem::path& path);
/// Like read_config_file but requires the "lines" key.
Configuration read_configuration(const std::filesystem::path& path);

Rational rational_from_json(const nlohmann::json& j);
/// Integers stay integers; other values become "p/q" strings.
nlohmann::json rational_to_json(const Rational& q);
nlohmann::ordered_json configuration_to_json(const Configuration& c);

nlohmann::ordered_json profile_report(const Profile& p);

struct CalibrationRecord {
  BracketConvention convention;
  std::vector<BracketConvention> matches;
  std::string reference;
  LaurentPoly target;
};

nlohmann::ordered_json calibration_to_json(const CalibrationRecord& r);
CalibrationRecord calibration_from_json(const nlohmann::json& j);
void write_calibration(const std::filesystem::path& path, const CalibrationRecord& r);
/// nullopt if the file does not exist; throws ParseError if it is malformed.
std::optional<CalibrationRecord> read_calibration(const std::filesystem::path& path);

}  // namespace skewlines
