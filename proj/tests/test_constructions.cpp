#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "skewlines/constructions.hpp"
#include "skewlines/error.hpp"
#include "skewlines/invariants.hpp"
#include "support.hpp"

using namespace skewlines;

namespace {

bool all_equal(const TripleTable& t, int s) {
  return std::all_of(t.signs().begin(), t.signs().end(), [s](auto e) { return e == s; });
}

}  // namespace

TEST_CASE("permutation parsing") {
  CHECK(Permutation::parse("1,2,5,6,3,4").images() == std::vector<int>{1, 2, 5, 6, 3, 4});
  CHECK(Permutation::parse("125634") == Permutation::parse("1, 2, 5, 6, 3, 4"));
  CHECK(Permutation::parse("1,2,5,6,3,4").reversed().str() == "4,3,6,5,2,1");
  try {
    Permutation::parse("1,2,2");
    FAIL("expected NotInjective");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInjective);
    CHECK(e.labels() == std::vector<int>{3});
  }
  CHECK_THROWS_AS(Permutation::parse("1,4,2"), Error);
  CHECK_THROWS_AS(Permutation::parse("1;2"), Error);
}

TEST_CASE("jc base cases") {
  Configuration two = jc(Permutation::identity(2));
  auto [a, b] = canonical_semiorientation(two.line(0), two.line(1));
  CHECK(lk_pair(a, b) == -1);
  CHECK(all_equal(triple_table(jc(Permutation::parse("123456"))), -1));
  CHECK(all_equal(triple_table(jc(Permutation::parse("654321"))), 1));
  CHECK_THROWS_AS(jc(Permutation::identity(1)), Error);
}

TEST_CASE("reversing sigma mirrors the join") {
  for (int n : {4, 5}) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    do {
      Permutation s(images);
      auto t = triple_table(jc(s));
      CHECK(canonical_table(triple_table(jc(s.reversed()))) == canonical_table(t.negated()));
    } while (std::next_permutation(images.begin(), images.end()));
  }
}

TEST_CASE("ruled families") {
  CHECK(all_equal(triple_table(ruled_family(1, 3)), 1));
  CHECK(all_equal(triple_table(ruled_family(-1, 6)), -1));
  CHECK(triple_table(ruled_family(-1, 5)) == triple_table(mirror(ruled_family(1, 5))));
  Configuration r = ruled_family(-1, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) CHECK(lk_pair(r.line(i), r.line(j)) == -1);
  }
  Configuration six = ruled_family(1, 6);
  for (const auto& l : six.lines()) {
    CHECK(standard_hyperboloid().evaluate(l.point_at(Rational(-5, 2))).is_zero());
  }
}

TEST_CASE("build_symbol realizes its table") {
  CHECK(all_equal(triple_table(build_symbol(DecompSymbol::parse("<+4>"))), 1));
  auto four = triple_table(build_symbol(DecompSymbol::parse("<<+2>,<-2>>")));
  CHECK(triple_sum(four) == 0);
  CHECK(canonical_table(four) == canonical_table(four.negated()));
  for (const char* s : {"<-5>", "<<+3>,<-3>>", "<+<1>,<-2>,<-2>>", "<<+<1>,<-2>>,<-<1>,<+2>>>",
                        "<-<+2>,<+<1>,<-2>,<-<1>,<+2>>>>", "<+<1>,<-2>,<-<+2>,<-2>,<+<-2>,<1>>>>"}) {
    CAPTURE(s);
    auto sym = DecompSymbol::parse(s);
    Configuration c = build_symbol(sym);
    CHECK(c.size() == sym.leaf_count());
    CHECK(TripleTable::from_configuration(c) == symbol_to_table(sym));
  }
  CHECK(build_symbol(DecompSymbol::parse("<2>")).size() == 2);
  CHECK_THROWS_AS(build_symbol(DecompSymbol::parse("<<+2>,<-2>,1>")), Error);
}

TEST_CASE("suspension and stable equivalence") {
  AbstractConfiguration a{triple_table(jc(Permutation::parse("125634")))};
  auto s = suspension(suspension(a));
  CHECK(s.k == 3);
  CHECK(s.table == a.table);
  CHECK(triple_sum(s.table) == triple_sum(a.table));
  CHECK(stable_equivalent(a, s));
  std::vector<int> perm{5, 3, 1, 0, 2, 4};
  CHECK(stable_equivalent(a, {a.table.relabeled(perm), 1}));
  AbstractConfiguration plus{TripleTable(6)}, minus{TripleTable(6).negated()};
  CHECK_FALSE(stable_equivalent(plus, minus));
  CHECK_THROWS_AS(stable_equivalent(plus, {TripleTable(5)}), Error);
  CHECK_THROWS_AS(stable_equivalent({TripleTable(9)}, {TripleTable(9)}), Error);
}

TEST_CASE("joins rigidly isotopic") {
  CHECK(joins_rigidly_isotopic(Permutation::parse("125634"), Permutation::parse("125634")));
  CHECK_FALSE(joins_rigidly_isotopic(Permutation::parse("123456"), Permutation::parse("654321")));
  // 1,2,3,4,6,5 and 2,1,3,4,5,6 both give <<+2>,<-4>>.
  CHECK(joins_rigidly_isotopic(Permutation::parse("123465"), Permutation::parse("213456")));
  CHECK_THROWS_AS(joins_rigidly_isotopic(Permutation::parse("123"), Permutation::parse("1234")), Error);
}

TEST_CASE("perturb") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    auto c = skewlines::testing::random_configuration(rng, 5);
    CHECK(perturb(c, Rational(0)) == c);
    auto p = perturb(c, Rational(1, 1000), static_cast<std::uint64_t>(trial));
    CHECK(!(p == c));
    CHECK(TripleTable::from_configuration(p) == TripleTable::from_configuration(c));
  }
  // Large offsets get scaled down until the straight path stays skew.
  auto j = jc(Permutation::parse("135264"));
  CHECK(TripleTable::from_configuration(perturb(j, Rational(50))) == TripleTable::from_configuration(j));
}
