#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "skewlines/bracket.hpp"
#include "skewlines/classify.hpp"
#include "skewlines/error.hpp"
#include "skewlines/io.hpp"

using namespace skewlines;
using nlohmann::json;

namespace {

std::pair<ErrorCode, std::vector<int>> config_error(const char* text) {
  try {
    parse_config(json::parse(text));
  } catch (const Error& e) {
    return {e.code(), e.labels()};
  }
  return {ErrorCode::Exhausted, {}};
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(rational_from_json(json(3)) == Rational(3));
  CHECK(rational_from_json(json("-6/4")) == Rational(-3, 2));
  CHECK(rational_to_json(Rational(5)) == json(5));
  CHECK(rational_to_json(Rational(1, 3)) == json("1/3"));
  CHECK_THROWS_AS(rational_from_json(json(1.5)), Error);
  CHECK_THROWS_AS(rational_from_json(json::array()), Error);
}

TEST_CASE("configuration round trip") {
  for (const char* s : {"<+<1>,<-2>,<-2>>", "<<+3>,<-3>>", "<-4>"}) {
    CAPTURE(s);
    auto c = build_symbol(DecompSymbol::parse(s));
    auto back = parse_config(json::parse(configuration_to_json(c).dump()));
    REQUIRE(back.lines);
    CHECK(*back.lines == c);
    CHECK(profile_report(profile(*back.lines)).dump() == profile_report(profile(c)).dump());
  }
}

TEST_CASE("config errors") {
  auto [code, labels] = config_error(
      R"({"lines":[{"point":[0,0,0],"direction":[1,0,0]},{"point":[0,0,0],"direction":[0,1,0]}]})");
  CHECK(code == ErrorCode::NotSkew);
  CHECK(labels == std::vector<int>{1, 2});
  CHECK(config_error(R"({"lines":[{"point":[0,0],"direction":[1,0,0]}]})").first == ErrorCode::ParseError);
  CHECK(config_error(R"({"lines":[{"point":[0,0,0],"direction":[0,0,0]}]})").first == ErrorCode::ZeroDirection);
  CHECK(config_error(R"({"points":[[0,0,0],[1,1,1],[2,2,2]]})").first == ErrorCode::Collinear);
  CHECK(config_error("[1,2]").first == ErrorCode::ParseError);
}

TEST_CASE("profile report") {
  auto r = profile_report(profile(jc(Permutation::parse("123465")), frozen_convention()));
  CHECK(r["n"] == 6);
  CHECK(r["triple_table"].size() == 20);
  CHECK(r["triple_table"].begin().key() == "1,2,3");
  CHECK(r["symbol"] == "<<+2>,<-4>>");
  CHECK(r["bracket"].is_array());
  std::vector<std::string> keys;
  for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
  CHECK(keys.front() == "n");
  CHECK(keys.back() == "chirality");

  auto nd = profile_report(profile(jc(Permutation::parse("1,3,5,2,4"))));
  CHECK(nd["symbol"] == "nondecomposable");
}

TEST_CASE("calibration record") {
  CalibrationRecord rec{frozen_convention(), {frozen_convention()}, "1,2,5,6,3,4",
                        golden_tables().bracket_jc125634};
  auto back = calibration_from_json(json::parse(calibration_to_json(rec).dump()));
  CHECK(back.convention == rec.convention);
  CHECK(back.matches == rec.matches);
  CHECK(back.reference == rec.reference);
  CHECK(back.target == rec.target);

  auto path = std::filesystem::temp_directory_path() / "skewlines-test-calibration.json";
  std::filesystem::remove(path);
  CHECK_FALSE(read_calibration(path));
  write_calibration(path, rec);
  auto read = read_calibration(path);
  REQUIRE(read);
  CHECK(read->convention == rec.convention);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(calibration_from_json(json::parse(R"({"convention":{}})")), Error);
}
