#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "skewlines/classify.hpp"
#include "skewlines/error.hpp"
#include "skewlines/io.hpp"

using namespace skewlines;

TEST_CASE("join cluster counts") {
  for (const auto& e : golden_tables().join_clusters) {
    if (e.n > 6) continue;
    CAPTURE(e.n);
    auto cls = classify_joins(e.n);
    CHECK(static_cast<int>(cls.clusters.size()) == e.value);
    std::size_t members = 0;
    for (const auto& c : cls.clusters) members += c.members.size();
    CHECK(members == (e.n == 3 ? 6u : e.n == 4 ? 24u : e.n == 5 ? 120u : 720u));
    CHECK_FALSE(cls.brackets_distinct);
  }
  CHECK_THROWS_AS(classify_joins(8), Error);
  CHECK_THROWS_AS(classify_joins(1), Error);
}

TEST_CASE("five-line clusters carry distinct brackets") {
  auto cls = classify_joins(5, frozen_convention());
  REQUIRE(cls.brackets_distinct);
  CHECK(*cls.brackets_distinct);
  std::set<std::string> seen;
  for (const auto& c : cls.clusters) {
    REQUIRE(c.bracket);
    seen.insert(c.bracket->str());
    CHECK(c.representative == c.members.front());
  }
  CHECK(seen.size() == 7);
}

TEST_CASE("identify") {
  auto id = identify(jc(Permutation::parse("1,2,3,6,5,4")));
  CHECK(id.status == Identification::Status::Join);
  REQUIRE(id.profile.decomposition);
  CHECK(id.profile.decomposition->symbol.str() == "<<+3>,<-3>>");

  auto five = identify(build_symbol(DecompSymbol::parse("<+5>")));
  CHECK(five.status == Identification::Status::Join);
  REQUIRE(five.table_match);
  CHECK(triple_table(jc(*five.table_match)) == TripleTable(5));

  auto m = read_configuration(SKEWLINES_TEST_DATA "/six_lines_m.json");
  auto mid = identify(m, frozen_convention());
  CHECK(mid.status == Identification::Status::NonJoinOrUnknown);
  CHECK_FALSE(mid.table_match);
  REQUIRE(mid.profile.bracket);
  CHECK(*mid.profile.bracket == golden_tables().bracket_m);
}

TEST_CASE("ordered join classes") {
  CHECK(ordered_join_classes(3) == 2);
  CHECK(ordered_join_classes(4) == 8);
  CHECK_THROWS_AS(ordered_join_classes(6), Error);
}

TEST_CASE("five-line triple sums are all different") {
  auto sums = five_line_sums();
  REQUIRE(sums.size() == 7);
  std::set<int> values;
  for (const auto& s : sums) values.insert(s.triple_sum);
  CHECK(values.size() == 7);
  CHECK(*values.begin() == -10);
  CHECK(*values.rbegin() == 10);
}

TEST_CASE("profile") {
  auto p = profile(jc(Permutation::parse("125634")), frozen_convention());
  CHECK(p.n == 6);
  REQUIRE(p.canonical);
  REQUIRE(p.bracket);
  CHECK(*p.bracket == golden_tables().bracket_jc125634);
  auto q = profile(ruled_family(1, 3));
  CHECK_FALSE(q.bracket);
  CHECK(q.triple_sum == 1);
  CHECK(q.chirality.kind == ChiralityVerdict::Kind::Nonamphicheiral);
}
