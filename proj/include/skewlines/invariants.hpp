#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewlines/geometry.hpp"
#include "skewlines/triple_table.hpp"

namespace skewlines {

/// Throws TooFewLines when n < 3.
TripleTable triple_table(const Configuration& c);

/// Sum of all entries; preserved by isotopy, negated by mirror reflection.
int triple_sum(const TripleTable& t);

struct ChiralityVerdict {
  enum class Kind { Nonamphicheiral, Inconclusive };
  enum class Reason { None, TripleCountParity, NonzeroTripleSum };

  Kind kind = Kind::Inconclusive;
  Reason reason = Reason::None;
  int triple_sum = 0;

  bool nonamphicheiral() const { return kind == Kind::Nonamphicheiral; }
  std::string str() const;
};

/// n = 3 mod 4 forces an odd number of triples, so the sum cannot vanish;
/// otherwise any nonzero sum is an obstruction.
ChiralityVerdict chirality_certificate(const TripleTable& t);
ChiralityVerdict chirality_certificate(const Configuration& c);

using Partition = std::vector<std::vector<int>>;

/// a ~ b iff every triple {a,x,y} agrees with {b,x,y} for x, y outside {a,b}.
/// Classes are sorted internally and ordered by smallest member.
Partition linking_equivalence_partition(const TripleTable& t);

/// entry{a,b,x} for a, b in the class and x outside, checked constant.
/// Throws ClassTooSmall, NoExternalLine or Inconsistent.
int class_epsilon(const TripleTable& t, const std::vector<int>& cls);

/// Table on one representative (the smallest label) per linking-equivalence class.
TripleTable derived_table(const TripleTable& t);

/// Lexicographic minimum, over all n! relabelings, of the sign sequence in colex
/// order (with -1 < +1). Throws TooLarge for n > 8.
TripleTable canonical_table(const TripleTable& t);

/// Sum of lk_triple over all triples of lines spanned by three disjoint point pairs.
/// Throws TooFewPoints for q < 6.
struct PointSetSum {
  long long value = 0;
  long long terms = 0;
};
PointSetSum pointset_skew_triple_sum(const PointSet& p);

/// Sum over cyclic triples: axis AB plus the lines joining consecutive points
/// (1st-2nd, 3rd-4th) of every 4-window of the pencil order of planes through AB.
/// Throws TooFewPoints for q < 7.
PointSetSum pointset_cyclic_invariant(const PointSet& p);

/// Pencil order (by angle mod pi) of the other points around the axis through
/// points a and b.
std::vector<int> pencil_order(const PointSet& p, int a, int b);

/// Existence of an amphicheiral nonsingular set of q points and p lines in RP^3.
bool podkorytov_exists(int p, int q);

}  // namespace skewlines
