#include "chacon/metrics.hpp"

#include <bit>
#include <stdexcept>

namespace chacon {

namespace {

void require_comparable(const Word& alpha, const Word& beta,
                        const char* where) {
  if (alpha.size() != beta.size()) {
    throw std::invalid_argument(std::string(where) +
                                ": words must have equal length");
  }
  if (alpha.empty()) {
    throw std::invalid_argument(std::string(where) +
                                ": words must be nonempty");
  }
}

// |{i : alpha(i) = 0 and beta(i) = 1}| for equal-length words. The
// padding bits of beta are zero, so ~alpha's stray high bits drop out.
uint64_t zero_one_mismatches(const Word& alpha, const Word& beta) {
  const auto a = alpha.blocks();
  const auto b = beta.blocks();
  uint64_t hits = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    hits += static_cast<uint64_t>(std::popcount(~a[i] & b[i]));
  }
  return hits;
}

}  // namespace

Rational hamming(const Word& alpha, const Word& beta) {
  require_comparable(alpha, beta, "hamming");
  const auto a = alpha.blocks();
  const auto b = beta.blocks();
  uint64_t diffs = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    diffs += static_cast<uint64_t>(std::popcount(a[i] ^ b[i]));
  }
  return Rational(diffs, alpha.size());
}

Rational zero_hamming(const Word& alpha, const Word& beta) {
  require_comparable(alpha, beta, "zero_hamming");
  const uint64_t zeros = alpha.count_zeros();
  if (zeros == 0) {
    throw std::invalid_argument("zero_hamming: first word contains no 0s");
  }
  return Rational(zero_one_mismatches(alpha, beta), zeros);
}

Lemma1Report verify_lemma1(const Hierarchy& hierarchy, int n) {
  if (n > hierarchy.cap() - 1) {
    throw std::out_of_range("verify_lemma1 requires n <= cap - 1 (cap " +
                            std::to_string(hierarchy.cap()) + ")");
  }
  const Word& wn = hierarchy.level(n);
  Word word_one = wn;  // W_n 1
  word_one.push_back(1);
  Word one_word;  // 1 W_n
  one_word.push_back(1);
  one_word.append(wn);

  Lemma1Report report;
  report.n = n;
  report.computed_forward = zero_hamming(word_one, one_word);
  report.computed_reverse = zero_hamming(one_word, word_one);
  report.predicted =
      Rational(1, 2) + Rational(1, 2 * integer_power(3, n));
  report.passed = report.computed_forward == report.predicted &&
                  report.computed_reverse == report.predicted;
  return report;
}

SubwordMinResult min_zero_hamming_over_subwords(const Hierarchy& hierarchy,
                                                int n, int search_level) {
  if (n >= search_level) {
    throw std::invalid_argument(
        "subword scan requires n < search_level");
  }
  const Word& wn = hierarchy.level(n);
  const Word& haystack = hierarchy.level(search_level);
  const uint64_t window = wn.size();

  SubwordMinResult best;
  bool found = false;
  Word candidate;
  for (uint64_t start = 0; start + window <= haystack.size(); ++start) {
    candidate = haystack.slice(start, window);
    if (candidate == wn) continue;
    ++best.candidates;
    const Rational d0 = zero_hamming(wn, candidate);
    if (!found || d0 < best.minimum) {
      best.minimum = d0;
      best.witness = candidate;
      best.witness_position = start;
      found = true;
    }
  }
  if (!found) {
    throw std::logic_error("no factor other than W_n found in the haystack");
  }
  return best;
}

Lemma2Report verify_lemma2(const Hierarchy& hierarchy, int n,
                           int search_level) {
  Lemma2Report report;
  report.n = n;
  report.search_level = search_level;
  report.scan = min_zero_hamming_over_subwords(hierarchy, n, search_level);
  report.bound = Rational(1, 6);
  report.passed = report.scan.minimum > report.bound;
  return report;
}

ZeroCountIdentityReport equal_zero_count_identities(const Word& alpha,
                                                    const Word& beta) {
  require_comparable(alpha, beta, "equal_zero_count_identities");
  const uint64_t zeros = alpha.count_zeros();
  if (zeros != beta.count_zeros()) {
    throw std::invalid_argument(
        "equal_zero_count_identities: words must have the same number of 0s");
  }
  if (zeros == 0) {
    throw std::invalid_argument(
        "equal_zero_count_identities: words contain no 0s");
  }

  ZeroCountIdentityReport report;
  report.d0_forward = zero_hamming(alpha, beta);
  report.d0_reverse = zero_hamming(beta, alpha);
  report.d = hamming(alpha, beta);
  report.zero_share = Rational(zeros, alpha.size());
  report.symmetric = report.d0_forward == report.d0_reverse;
  report.identity_holds =
      report.d == Rational(2) * report.d0_forward * report.zero_share;
  report.passed = report.symmetric && report.identity_holds;
  return report;
}

}  // namespace chacon
