#include "chacon/measure.hpp"

#include <stdexcept>

namespace chacon {

Rational frequency(const Hierarchy& hierarchy, const Word& pattern, int n) {
  if (pattern.empty()) {
    throw std::invalid_argument("frequency: pattern must be nonempty");
  }
  const Word& word = hierarchy.level(n);
  const uint64_t count = occurrences(pattern, word).size();
  return Rational(count, word.size());
}

FrequencySequence measure_estimate(const Hierarchy& hierarchy,
                                   const Word& pattern, int first_level,
                                   int last_level) {
  if (first_level < 0 || first_level > last_level) {
    throw std::invalid_argument("measure_estimate: empty level range");
  }
  FrequencySequence sequence;
  sequence.pattern = pattern;
  for (int n = first_level; n <= last_level; ++n) {
    sequence.values.push_back({n, frequency(hierarchy, pattern, n)});
  }
  sequence.final_value = sequence.values.back().value;
  if (sequence.values.size() >= 2) {
    const auto& tail = sequence.values;
    sequence.last_difference =
        abs(tail[tail.size() - 1].value - tail[tail.size() - 2].value);
  }
  return sequence;
}

FrequencySequence measure_estimate(const Hierarchy& hierarchy,
                                   const CylinderSet& cylinder,
                                   int first_level, int last_level) {
  return measure_estimate(hierarchy, cylinder.pattern, first_level,
                          last_level);
}

}  // namespace chacon
