#pragma once

#include "chacon/hierarchy.hpp"
#include "chacon/metrics.hpp"
#include "chacon/rational.hpp"
#include "chacon/word.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chacon {

// Distances between W and its positive shifts.
//
// For a shift i with anchor level n (the smallest n with i < |W_n|),
// the comparison windows that occurrences of W_n in W see in sigma^i W
// take exactly two shapes:
//
//   beta1 = (last |W_n|-i symbols of W_n) (first i symbols of W_n)
//   beta2 = (last |W_n|-i symbols of W_n) 1 (first i-1 symbols of W_n)
//
// depending on whether the occurrence is followed by W_n or by 1W_n.
// The follow types split the 3^k occurrences inside W_{n+k} into
// (3^k+1)/2 of the first kind and (3^k-1)/2 of the second, so the level
// distances converge to the plain average of d0(W_n, beta1) and
// d0(W_n, beta2).

// Smallest n with shift < |W_n|. Throws std::invalid_argument for
// shift 0.
int anchor_level(uint64_t shift);

struct ShiftDecomposition {
  uint64_t shift = 0;
  int anchor = 0;
  Word beta1;
  Word beta2;
  Rational d0_beta1;
  Rational d0_beta2;
};

// Builds the two comparison words at the minimal anchor level and
// cross-checks them against the windows actually read from W at the
// first occurrence of each follow type.
ShiftDecomposition decompose(const Hierarchy& hierarchy, uint64_t shift);

// Same, at an explicitly chosen anchor level (shift < |W_n| required).
// The limit value is independent of this choice.
ShiftDecomposition decompose_at_level(const Hierarchy& hierarchy,
                                      uint64_t shift, int level);

struct FollowTypeCounts {
  int n = 0;
  int k = 0;
  uint64_t followed_by_word = 0;      // occurrences followed by W_n
  uint64_t followed_by_one_word = 0;  // occurrences followed by 1 W_n
};

// Classifies, by direct scan, how each of the 3^k occurrences of W_n in
// the W_{n+k}-prefix of W continues in W. Requires n + k <= cap.
FollowTypeCounts follow_type_counts(const Hierarchy& hierarchy, int n, int k);

// d0(W_{n+k}, alpha_{n+k}) for the window alpha_{n+k} of W starting at
// `shift`, where n is the anchor level: the exact weighted average
// ((3^k+1)/2 d0(beta1) + (3^k-1)/2 d0(beta2)) / 3^k.
Rational finite_level_d0(const Hierarchy& hierarchy, uint64_t shift, int k);

struct ShiftDistance {
  ShiftDecomposition decomposition;
  Rational d0_limit;  // (d0(beta1) + d0(beta2)) / 2
  Rational d_limit;   // (4/3) d0_limit
};

// The limit distances d0(W, sigma^i W) and d(W, sigma^i W).
ShiftDistance limit_distance(const Hierarchy& hierarchy, uint64_t shift);

struct ProfileRow {
  uint64_t shift = 0;
  Rational d0_limit;
  Rational d_limit;
};

// One row per shift in [first, last], inclusive. Rows are independent
// and deterministic. Throws std::invalid_argument on an empty range or
// first == 0.
std::vector<ProfileRow> profile(const Hierarchy& hierarchy, uint64_t first,
                                uint64_t last);

struct Prop1Report {
  int max_level = 0;
  uint64_t shifts_checked = 0;
  Rational min_d0;
  Rational min_d;
  uint64_t argmin_shift = 0;
  bool passed = false;
  std::string failure;  // first counterexample, empty when passed
};

// For every shift in [1, |W_max_level|), checks d0 > 1/6 and d > 2/9
// exactly and reports the minimum attained and where.
Prop1Report verify_prop1(const Hierarchy& hierarchy, int max_level);

struct Prop2Entry {
  int n = 0;
  uint64_t shift = 0;  // 2|W_{n-1}| + 1
  Rational d0;
  Rational d;
  Rational predicted_d0;  // 1/6 + 1/(2*3^n)
  Rational predicted_d;   // 2/9 + 2/3^{n+1}
  bool betas_match = false;
  bool passed = false;
};

struct Prop2Report {
  int max_n = 0;
  bool passed = false;
  std::vector<Prop2Entry> entries;
};

// For n = 1..max_n and shift 2|W_{n-1}|+1, checks the exact closed forms
// and that the two comparison words are W_{n-1}W_{n-1}W_{n-1}1 and
// W_{n-1}1W_{n-1}W_{n-1}.
Prop2Report verify_prop2(const Hierarchy& hierarchy, int max_n);

struct Lemma3Report {
  uint64_t max_shift = 0;
  int samples = 0;
  uint64_t ratio_checks = 0;  // finite-level comparisons performed
  bool passed = false;
  std::string failure;
};

// Deterministically samples `samples` shifts in [1, max_shift] and checks,
// for each: d_limit = (4/3) d0_limit exactly; at every feasible level
// m >= anchor, the brute-force finite-level distances satisfy
// d = 2 d0 (3^m / |W_m|) and d/d0 = 4*3^m / (3^{m+1}-1), a ratio that
// decreases strictly toward 4/3 from above; and the closed-form
// finite-level d0 equals the brute-force value. Requires
// max_shift < |W_{cap-1}| so that at least two levels are comparable.
Lemma3Report verify_lemma3(const Hierarchy& hierarchy, uint64_t max_shift,
                           int samples);

}  // namespace chacon
