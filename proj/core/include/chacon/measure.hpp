#pragma once

#include "chacon/hierarchy.hpp"
#include "chacon/rational.hpp"
#include "chacon/word.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace chacon {

// A cylinder set: the points of the subshift carrying `pattern` starting
// at `position`. The invariant measure is shift invariant, so estimates
// depend only on the pattern; the position is carried for labeling.
struct CylinderSet {
  Word pattern;
  int64_t position = 0;
};

// Frequency of `pattern` in W_n: occurrence count divided by |W_n|.
Rational frequency(const Hierarchy& hierarchy, const Word& pattern, int n);

struct FrequencyEntry {
  int level = 0;
  Rational value;
};

struct FrequencySequence {
  Word pattern;
  std::vector<FrequencyEntry> values;
  Rational final_value;
  // |fr(last) - fr(last - 1)|; absent when the range has a single level.
  std::optional<Rational> last_difference;
};

// The exact frequencies fr(pattern, W_n) for n in [first_level,
// last_level], with the final value and last successive difference.
// These tend to the measure of the cylinder set of `pattern`.
FrequencySequence measure_estimate(const Hierarchy& hierarchy,
                                   const Word& pattern, int first_level,
                                   int last_level);

FrequencySequence measure_estimate(const Hierarchy& hierarchy,
                                   const CylinderSet& cylinder,
                                   int first_level, int last_level);

}  // namespace chacon
