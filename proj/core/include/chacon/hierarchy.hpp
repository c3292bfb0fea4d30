#pragma once

#include "chacon/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chacon {

// The word family W_0 = "0", W_{n+1} = W_n W_n 1 W_n, and the infinite
// word W having every W_n as a prefix.
//
// |W_n| = (3^{n+1} - 1) / 2; W_n contains 3^n zeros and (3^n - 1)/2 ones.

inline constexpr int kDefaultCap = 15;

// Largest n for which |W_n| fits in 64 bits.
inline constexpr int kMaxLevel = 40;

// Largest materialization cap Hierarchy accepts (|W_19| is ~218 MiB packed).
inline constexpr int kMaxCap = 19;

uint64_t level_length(int n);      // |W_n|
uint64_t level_zero_count(int n);  // 3^n
uint64_t level_one_count(int n);   // (3^n - 1) / 2

// W(position) for the infinite word W, by descending the length
// recursion. O(log position); materializes nothing. Defined for every
// 64-bit position.
int letter_at(uint64_t position);

// Materialized prefix levels W_0 .. W_cap, built eagerly and immutable
// afterwards; instances may be shared freely across threads.
class Hierarchy {
 public:
  explicit Hierarchy(int cap = kDefaultCap);

  int cap() const noexcept { return cap_; }

  // W_n. Throws std::out_of_range above the cap, naming the cap.
  const Word& level(int n) const;

  // W[start, start + length). Positions past |W_cap| are served by
  // descending virtual levels and copying from materialized blocks;
  // start + length may not exceed |W_40|.
  Word segment(uint64_t start, uint64_t length) const;

 private:
  void copy_range(int n, uint64_t start, uint64_t length, Word& out) const;

  int cap_;
  std::vector<Word> levels_;
};

struct StructureCheck {
  std::string fact;
  bool passed = false;
  std::string detail;  // names the violated position/value on failure
};

struct StructureReport {
  int level = 0;
  bool all_passed = false;
  std::vector<StructureCheck> checks;
};

// Checks the structural facts of W_n: prefix 001 and suffix 10 (n >= 1),
// symbol counts 3^n and (3^n - 1)/2, absence of the factors 11, 0000 and
// W_m W_m W_m W_m (for every m with 4|W_m| <= |W_n|), and occurrence
// succession: every occurrence of W_m except the first is immediately
// preceded by W_m or W_m1, every one except the last is immediately
// followed by W_m or 1W_m.
StructureReport check_structure(const Hierarchy& hierarchy, int n);

// Same facts asserted against an arbitrary candidate word in place of
// W_n; lets callers (and tests) exercise the failure reporting.
StructureReport check_word_structure(const Hierarchy& hierarchy,
                                     const Word& candidate, int n);

struct OccurrenceCountCheck {
  int n = 0;
  int k = 0;
  uint64_t expected = 0;  // 3^k
  uint64_t found = 0;
  bool passed = false;
};

// Counts occurrences of W_n in W_{n+k} and compares with the expected 3^k.
OccurrenceCountCheck check_occurrence_count(const Hierarchy& hierarchy, int n,
                                            int k);

}  // namespace chacon
