#include "skewlines/io.hpp"

#include <fstream>
#include <sstream>

#include "skewlines/error.hpp"

namespace skewlines {

using nlohmann::json;
using nlohmann::ordered_json;

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected an integer or a \"p/q\" string, got " + j.dump());
}

json rational_to_json(const Rational& q) {
  if (q.is_integer() && q.numerator().fits_slong_p()) return q.numerator().get_si();
  return q.str();
}

namespace {

Vec3 vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw Error(ErrorCode::ParseError, where + ": expected 3 coordinates");
  try {
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])};
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, where + ": " + e.what());
  }
}

ordered_json vec_to_json(const Vec3& v) {
  return ordered_json::array({rational_to_json(v.x), rational_to_json(v.y), rational_to_json(v.z)});
}

}  // namespace

ConfigFile parse_config(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "configuration must be a JSON object");
  if (!j.contains("lines") && !j.contains("points")) {
    throw Error(ErrorCode::ParseError, "configuration needs \"lines\" or \"points\"");
  }
  ConfigFile out;
  if (j.contains("lines")) {
    const auto& arr = j.at("lines");
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "\"lines\" must be an array");
    std::vector<OrientedLine> lines;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& e = arr[i];
      const int label = static_cast<int>(i) + 1;
      std::string where = "line " + std::to_string(label);
      if (!e.is_object() || !e.contains("point") || !e.contains("direction")) {
        throw Error(ErrorCode::ParseError, where + ": needs \"point\" and \"direction\"", {label});
      }
      Vec3 p = vec_from_json(e.at("point"), where);
      Vec3 d = vec_from_json(e.at("direction"), where);
      if (d.is_zero()) throw Error(ErrorCode::ZeroDirection, where + ": zero direction", {label});
      lines.emplace_back(p, d);
    }
    out.lines = Configuration(std::move(lines));
  }
  if (j.contains("points")) {
    const auto& arr = j.at("points");
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "\"points\" must be an array");
    std::vector<Vec3> pts;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      pts.push_back(vec_from_json(arr[i], "point " + std::to_string(i + 1)));
    }
    out.points = PointSet(std::move(pts));
  }
  return out;
}

ConfigFile read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return parse_config(j);
}

Configuration read_configuration(const std::filesystem::path& path) {
  ConfigFile f = read_config_file(path);
  if (!f.lines) throw Error(ErrorCode::ParseError, path.string() + ": no \"lines\"");
  return *f.lines;
}

ordered_json configuration_to_json(const Configuration& c) {
  ordered_json lines = ordered_json::array();
  for (const auto& l : c.lines()) {
    ordered_json e;
    e["point"] = vec_to_json(l.base());
    e["direction"] = vec_to_json(l.dir());
    lines.push_back(std::move(e));
  }
  ordered_json out;
  out["lines"] = std::move(lines);
  return out;
}

ordered_json profile_report(const Profile& p) {
  ordered_json r;
  r["n"] = p.n;
  ordered_json table = ordered_json::object();
  for_each_triple(p.n, [&](int i, int j, int k) {
    table[std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1)] = p.table.at(i, j, k);
  });
  r["triple_table"] = std::move(table);
  r["triple_sum"] = p.triple_sum;
  if (p.decomposition) {
    r["symbol"] = p.decomposition->symbol.str();
    r["symbol_leaf_lines"] = ordered_json::array();
    for (int l : p.decomposition->leaf_labels) r["symbol_leaf_lines"].push_back(l + 1);
  } else {
    r["symbol"] = "nondecomposable";
  }
  if (p.bracket) {
    ordered_json b = ordered_json::array();
    for (auto [e, c] : p.bracket->pairs()) b.push_back(ordered_json::array({e, c}));
    r["bracket"] = std::move(b);
    r["bracket_text"] = p.bracket->str();
  } else {
    r["bracket"] = nullptr;
  }
  ordered_json chir;
  chir["verdict"] = p.chirality.nonamphicheiral() ? "nonamphicheiral" : "inconclusive";
  chir["detail"] = p.chirality.str();
  r["chirality"] = std::move(chir);
  return r;
}

namespace {

ordered_json convention_json(const BracketConvention& c) {
  ordered_json j;
  j["flip"] = c.flip;
  j["offset"] = c.offset;
  j["mu"] = to_string(c.mu);
  j["unit"] = c.unit;
  return j;
}

BracketConvention convention_from(const json& j) {
  BracketConvention c;
  c.flip = j.at("flip").get<bool>();
  c.offset = j.at("offset").get<int>();
  c.mu = parse_loop_factor(j.at("mu").get<std::string>());
  c.unit = j.at("unit").get<int>();
  return c;
}

}  // namespace

ordered_json calibration_to_json(const CalibrationRecord& r) {
  ordered_json j;
  j["convention"] = convention_json(r.convention);
  j["matches"] = ordered_json::array();
  for (const auto& m : r.matches) j["matches"].push_back(convention_json(m));
  j["reference"] = r.reference;
  j["target"] = r.target.str();
  return j;
}

CalibrationRecord calibration_from_json(const json& j) {
  try {
    CalibrationRecord r;
    r.convention = convention_from(j.at("convention"));
    for (const auto& m : j.value("matches", json::array())) r.matches.push_back(convention_from(m));
    r.reference = j.value("reference", "");
    r.target = LaurentPoly::parse(j.value("target", "0"));
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("calibration record: ") + e.what());
  }
}

void write_calibration(const std::filesystem::path& path, const CalibrationRecord& r) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << calibration_to_json(r).dump(2) << "\n";
}

std::optional<CalibrationRecord> read_calibration(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return calibration_from_json(j);
}

}  // namespace skewlines
