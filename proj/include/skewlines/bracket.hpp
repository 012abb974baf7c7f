#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewlines/diagram.hpp"
#include "skewlines/geometry.hpp"
#include "skewlines/laurent.hpp"

namespace skewlines {

/// Candidate weights of a noncontractible loop.
enum class LoopFactor { One, A2PlusAm2, MinusA2MinusAm2, APlusAm1 };

std::string to_string(LoopFactor f);
/// Accepts the enum name or its formula ("1", "A^2+A^-2", "-A^2-A^-2", "A+A^-1").
LoopFactor parse_loop_factor(const std::string& s);
LaurentPoly loop_factor_poly(LoopFactor f);

/// Bracket of a state: A^(#A - #B) delta^(#contractible + offset) mu^(#noncontractible),
/// delta = -A^2 - A^-2, summed over states and multiplied by A^unit. With offset -1 the
/// sum is divided exactly by delta.
struct BracketConvention {
  /// Swap the roles of the A- and B-smoothings.
  bool flip = false;
  int offset = 0;
  LoopFactor mu = LoopFactor::One;
  int unit = 0;

  std::string str() const;
  friend bool operator==(const BracketConvention&, const BracketConvention&) = default;
};

/// Convention fixed by calibration against the jc(1,2,5,6,3,4) reference value.
BracketConvention frozen_convention();

/// Number of states with given #A, #contractible, #noncontractible loops.
struct StateHistogram {
  int crossings = 0;
  struct Entry {
    int a_count;
    int contractible;
    int noncontractible;
    std::int64_t states;
  };
  std::vector<Entry> entries;
  /// Largest number of noncontractible loops seen in one state.
  int max_noncontractible = 0;
  std::int64_t total_states = 0;
};

/// threads <= 0 picks hardware concurrency. The result does not depend on it.
StateHistogram state_histogram(const Diagram& d, bool flip, int threads = 0);
/// Throws InexactDivision if offset -1 does not divide.
LaurentPoly evaluate(const StateHistogram& h, const BracketConvention& conv);
LaurentPoly state_sum(const Diagram& d, const BracketConvention& conv, int threads = 0);

LaurentPoly drobotukhina(const Configuration& c, const BracketConvention& conv = frozen_convention(),
                         int threads = 0);
LaurentPoly drobotukhina(const Configuration& c, const Vec3& dir,
                         const BracketConvention& conv = frozen_convention(), int threads = 0);

struct Calibration {
  /// Every grid point (flip, offset in {0,-1}, mu, unit in [-6,6]) reproducing the target.
  std::vector<BracketConvention> matches;
  BracketConvention chosen;
};

/// Grid search. Matches that differ only in mu are told apart by nothing on an even
/// reference (no noncontractible loops); -A^2-A^-2 is then preferred. Throws NoMatch
/// (with the nearest candidates) or Ambiguous.
Calibration calibrate(const Configuration& reference, const LaurentPoly& target, int threads = 0);

}  // namespace skewlines
