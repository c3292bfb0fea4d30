#include "chacon/hierarchy.hpp"

#include <algorithm>
#include <stdexcept>

namespace chacon {

namespace {

struct LevelTables {
  uint64_t length[kMaxLevel + 1];
  uint64_t zeros[kMaxLevel + 1];
  LevelTables() {
    length[0] = 1;
    zeros[0] = 1;
    for (int n = 1; n <= kMaxLevel; ++n) {
      length[n] = 3 * length[n - 1] + 1;
      zeros[n] = 3 * zeros[n - 1];
    }
  }
};

const LevelTables& tables() {
  static const LevelTables t;
  return t;
}

void require_level(int n) {
  if (n < 0 || n > kMaxLevel) {
    throw std::out_of_range("level " + std::to_string(n) +
                            " outside the supported range 0.." +
                            std::to_string(kMaxLevel));
  }
}

}  // namespace

uint64_t level_length(int n) {
  require_level(n);
  return tables().length[n];
}

uint64_t level_zero_count(int n) {
  require_level(n);
  return tables().zeros[n];
}

uint64_t level_one_count(int n) {
  require_level(n);
  return (tables().zeros[n] - 1) / 2;
}

int letter_at(uint64_t position) {
  const auto& t = tables();
  // Every 64-bit position lies inside W_41 = W_40 W_40 1 W_40, and in
  // fact inside its first two blocks (2|W_40| exceeds uint64), so one
  // fold reduces any position into W_40.
  if (position >= t.length[kMaxLevel]) position -= t.length[kMaxLevel];
  int n = 0;
  while (t.length[n] <= position) ++n;
  while (n > 0) {
    const uint64_t prev = t.length[n - 1];
    if (position < prev) {
      --n;
      continue;
    }
    if (position < 2 * prev) {
      position -= prev;
      --n;
      continue;
    }
    if (position == 2 * prev) return 1;
    position -= 2 * prev + 1;
    --n;
  }
  return 0;
}

Hierarchy::Hierarchy(int cap) : cap_(cap) {
  if (cap < 0) {
    throw std::invalid_argument("materialization cap must be nonnegative");
  }
  if (cap > kMaxCap) {
    throw std::invalid_argument(
        "materialization cap " + std::to_string(cap) +
        " exceeds the supported maximum " + std::to_string(kMaxCap));
  }
  levels_.reserve(static_cast<size_t>(cap) + 1);
  levels_.push_back(Word::from_string("0"));
  for (int n = 1; n <= cap; ++n) {
    const Word& prev = levels_.back();
    Word next;
    next.append(prev);
    next.append(prev);
    next.push_back(1);
    next.append(prev);
    levels_.push_back(std::move(next));
  }
}

const Word& Hierarchy::level(int n) const {
  if (n < 0) throw std::out_of_range("level index must be nonnegative");
  if (n > cap_) {
    throw std::out_of_range("level " + std::to_string(n) +
                            " is above the materialization cap " +
                            std::to_string(cap_));
  }
  return levels_[static_cast<size_t>(n)];
}

void Hierarchy::copy_range(int n, uint64_t start, uint64_t length,
                           Word& out) const {
  while (length > 0) {
    if (n <= cap_) {
      out.append_range(levels_[static_cast<size_t>(n)], start, length);
      return;
    }
    const uint64_t prev = level_length(n - 1);
    if (start < prev) {
      const uint64_t take = std::min(length, prev - start);
      copy_range(n - 1, start, take, out);
      start += take;
      length -= take;
      continue;
    }
    if (start < 2 * prev) {
      const uint64_t take = std::min(length, 2 * prev - start);
      copy_range(n - 1, start - prev, take, out);
      start += take;
      length -= take;
      continue;
    }
    if (start == 2 * prev) {
      out.push_back(1);
      ++start;
      --length;
      continue;
    }
    // Inside the trailing copy; the rest of the range lives there.
    start -= 2 * prev + 1;
    --n;
  }
}

Word Hierarchy::segment(uint64_t start, uint64_t length) const {
  Word out;
  if (length == 0) return out;
  const uint64_t end = start + length;
  if (end < start || end > level_length(kMaxLevel)) {
    throw std::out_of_range("segment end exceeds the supported position range");
  }
  int n = 0;
  while (level_length(n) < end) ++n;
  copy_range(n, start, length, out);
  return out;
}

namespace {

void add_check(StructureReport& report, std::string fact, bool passed,
               std::string detail = "") {
  report.checks.push_back({std::move(fact), passed, std::move(detail)});
  if (!passed) report.all_passed = false;
}

// First position where word contains `factor`, or -1.
int64_t find_factor(const Word& factor, const Word& word) {
  if (factor.size() > word.size()) return -1;
  auto hits = occurrences(factor, word);
  return hits.empty() ? -1 : static_cast<int64_t>(hits.front());
}

}  // namespace

StructureReport check_word_structure(const Hierarchy& hierarchy,
                                     const Word& candidate, int n) {
  StructureReport report;
  report.level = n;
  report.all_passed = true;
  const uint64_t expected_length = level_length(n);

  add_check(report, "length is (3^{n+1}-1)/2",
            candidate.size() == expected_length,
            "length " + std::to_string(candidate.size()) + ", expected " +
                std::to_string(expected_length));
  if (candidate.size() != expected_length) return report;

  if (n == 0) {
    add_check(report, "W_0 is 0", candidate.to_string() == "0");
  } else {
    add_check(report, "begins with 001",
              candidate.size() >= 3 && candidate.bit(0) == 0 &&
                  candidate.bit(1) == 0 && candidate.bit(2) == 1);
    add_check(report, "ends with 10",
              candidate.bit(candidate.size() - 2) == 1 &&
                  candidate.bit(candidate.size() - 1) == 0);
  }

  const uint64_t zeros = candidate.count_zeros();
  const uint64_t ones = candidate.count_ones();
  add_check(report, "zero count is 3^n", zeros == level_zero_count(n),
            "found " + std::to_string(zeros));
  add_check(report, "one count is (3^n-1)/2", ones == level_one_count(n),
            "found " + std::to_string(ones));

  const int64_t pos11 = find_factor(Word::from_string("11"), candidate);
  add_check(report, "no factor 11", pos11 < 0,
            pos11 < 0 ? "" : "at position " + std::to_string(pos11));
  const int64_t pos0000 = find_factor(Word::from_string("0000"), candidate);
  add_check(report, "no factor 0000", pos0000 < 0,
            pos0000 < 0 ? "" : "at position " + std::to_string(pos0000));

  for (int m = 0; m <= n; ++m) {
    const Word& wm = hierarchy.level(m);
    const uint64_t lm = wm.size();

    if (4 * lm <= expected_length) {
      Word quad;
      for (int copy = 0; copy < 4; ++copy) quad.append(wm);
      const int64_t pos = find_factor(quad, candidate);
      add_check(report, "no factor W_m^4 (m=" + std::to_string(m) + ")",
                pos < 0, pos < 0 ? "" : "at position " + std::to_string(pos));
    }

    const auto positions = occurrences(wm, candidate);
    bool preceded_ok = true;
    bool followed_ok = true;
    std::string preceded_detail;
    std::string followed_detail;
    for (size_t j = 1; j < positions.size(); ++j) {
      const uint64_t p = positions[j];
      const bool by_word =
          p >= lm && std::binary_search(positions.begin(), positions.end(),
                                        p - lm);
      const bool by_word_one =
          p >= lm + 1 && candidate.bit(p - 1) == 1 &&
          std::binary_search(positions.begin(), positions.end(), p - lm - 1);
      if (!by_word && !by_word_one) {
        preceded_ok = false;
        preceded_detail = "occurrence at " + std::to_string(p);
        break;
      }
    }
    for (size_t j = 0; j + 1 < positions.size(); ++j) {
      const uint64_t p = positions[j];
      const bool by_word =
          std::binary_search(positions.begin(), positions.end(), p + lm);
      const bool by_one_word =
          p + lm < candidate.size() && candidate.bit(p + lm) == 1 &&
          std::binary_search(positions.begin(), positions.end(), p + lm + 1);
      if (!by_word && !by_one_word) {
        followed_ok = false;
        followed_detail = "occurrence at " + std::to_string(p);
        break;
      }
    }
    add_check(report,
              "interior occurrences of W_m preceded by W_m or W_m1 (m=" +
                  std::to_string(m) + ")",
              preceded_ok, preceded_detail);
    add_check(report,
              "interior occurrences of W_m followed by W_m or 1W_m (m=" +
                  std::to_string(m) + ")",
              followed_ok, followed_detail);
  }

  return report;
}

StructureReport check_structure(const Hierarchy& hierarchy, int n) {
  return check_word_structure(hierarchy, hierarchy.level(n), n);
}

OccurrenceCountCheck check_occurrence_count(const Hierarchy& hierarchy, int n,
                                            int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("level and offset must be nonnegative");
  }
  OccurrenceCountCheck check;
  check.n = n;
  check.k = k;
  check.expected = level_zero_count(k);  // 3^k
  check.found =
      occurrences(hierarchy.level(n), hierarchy.level(n + k)).size();
  check.passed = check.found == check.expected;
  return check;
}

}  // namespace chacon
