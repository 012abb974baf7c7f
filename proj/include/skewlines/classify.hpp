#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewlines/bracket.hpp"
#include "skewlines/constructions.hpp"
#include "skewlines/invariants.hpp"
#include "skewlines/symbol.hpp"

namespace skewlines {

/// Invariant profile of one configuration.
struct Profile {
  int n = 0;
  TripleTable table;
  /// Present for n <= 8.
  std::optional<TripleTable> canonical;
  int triple_sum = 0;
  /// nullopt when not completely decomposable.
  std::optional<Decomposition> decomposition;
  std::optional<LaurentPoly> bracket;
  ChiralityVerdict chirality;
};

/// The bracket is computed only when a convention is given.
Profile profile(const Configuration& c, const std::optional<BracketConvention>& conv = std::nullopt,
                int threads = 0);

/// Printed reference data for six lines.
struct GoldenTables {
  struct Identity {
    std::string permutation;
    std::string symbol;
  };
  struct MirrorPair {
    std::string first;
    std::string second;
  };
  struct Expected {
    int n;
    int value;
  };

  std::vector<Identity> identities;
  std::vector<MirrorPair> mirror_pairs;
  /// Nondecomposable six-line joins.
  std::vector<std::string> nondecomposable;
  std::string bracket_reference = "1,2,5,6,3,4";
  LaurentPoly bracket_jc125634;
  LaurentPoly bracket_m;
  LaurentPoly bracket_m_mirror;
  LaurentPoly bracket_l;
  std::vector<Expected> join_clusters;
  std::vector<Expected> ordered_classes;
};

const GoldenTables& golden_tables();

struct JoinCluster {
  /// Lexicographically smallest member.
  Permutation representative;
  std::vector<Permutation> members;
  TripleTable canonical;
  int triple_sum = 0;
  std::optional<DecompSymbol> symbol;
  std::optional<LaurentPoly> bracket;
};

struct JoinClassification {
  int n = 0;
  /// Ordered by representative.
  std::vector<JoinCluster> clusters;
  /// Set when brackets were computed: no two clusters share a bracket.
  std::optional<bool> brackets_distinct;
};

/// Clusters S_n by canonical triple table. Throws TooFewLines (n < 2) or TooLarge (n > 7).
JoinClassification classify_joins(int n, const std::optional<BracketConvention>& conv = std::nullopt,
                                  int threads = 0);

struct Identification {
  enum class Status { Join, NonJoinOrUnknown };

  Profile profile;
  Status status = Status::NonJoinOrUnknown;
  /// Representative of the join class with the same canonical table, if any.
  std::optional<Permutation> table_match;
  std::string note;
};

/// Throws TooLarge for n > 7.
Identification identify(const Configuration& c, const std::optional<BracketConvention>& conv = std::nullopt,
                        int threads = 0);

/// Distinct labeled triple tables of all relabelings of all jc(sigma), sigma in S_n.
/// Throws TooLarge for n > 5.
int ordered_join_classes(int n);

struct ClusterSum {
  Permutation representative;
  std::optional<DecompSymbol> symbol;
  int triple_sum = 0;
};

/// Triple sum of each five-line join cluster.
std::vector<ClusterSum> five_line_sums();

}  // namespace skewlines
