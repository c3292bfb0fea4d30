#pragma once

#include "chacon/hierarchy.hpp"
#include "chacon/rational.hpp"
#include "chacon/word.hpp"

#include <cstdint>

namespace chacon {

// Fraction of positions where the two words disagree.
// Both words must be nonempty and of equal length.
Rational hamming(const Word& alpha, const Word& beta);

// Fraction of alpha's 0-positions where beta carries a 1.
// Equal lengths required; alpha must contain at least one 0 (the
// quantity is undefined otherwise, so this is a hard error).
Rational zero_hamming(const Word& alpha, const Word& beta);

struct Lemma1Report {
  int n = 0;
  Rational computed_forward;  // d0(W_n 1, 1 W_n), by brute force
  Rational computed_reverse;  // d0(1 W_n, W_n 1), by brute force
  Rational predicted;         // 1/2 + 1/(2*3^n)
  bool passed = false;
};

// Brute-forces d0 between W_n1 and 1W_n in both orders and compares with
// the closed form 1/2 + 1/(2*3^n). Requires n <= cap - 1.
Lemma1Report verify_lemma1(const Hierarchy& hierarchy, int n);

struct SubwordMinResult {
  Rational minimum;
  Word witness;
  uint64_t witness_position = 0;  // start of the witness in W_{search_level}
  uint64_t candidates = 0;        // windows examined (W_n itself excluded)
};

// Exhaustive minimum of d0(W_n, beta) over every length-|W_n| factor beta
// of W_{search_level} with beta != W_n. Ties resolve to the smallest
// start position. Requires n < search_level <= cap.
SubwordMinResult min_zero_hamming_over_subwords(const Hierarchy& hierarchy,
                                                int n, int search_level);

struct Lemma2Report {
  int n = 0;
  int search_level = 0;
  SubwordMinResult scan;
  Rational bound;  // 1/6
  bool passed = false;
};

// Runs the exhaustive scan and checks that the minimum strictly exceeds 1/6.
Lemma2Report verify_lemma2(const Hierarchy& hierarchy, int n,
                           int search_level);

struct ZeroCountIdentityReport {
  Rational d0_forward;   // d0(alpha, beta)
  Rational d0_reverse;   // d0(beta, alpha)
  Rational d;            // d(alpha, beta)
  Rational zero_share;   // #zeros(alpha) / |alpha|
  bool symmetric = false;
  bool identity_holds = false;  // d == 2 * d0 * zero_share
  bool passed = false;
};

// For words with the same positive number of 0s, checks d0 symmetry and
// the identity d = 2 * d0 * (#zeros / length), exactly. Words with
// different zero counts are rejected (the identities are not claimed
// there).
ZeroCountIdentityReport equal_zero_count_identities(const Word& alpha,
                                                    const Word& beta);

}  // namespace chacon
