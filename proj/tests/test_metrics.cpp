#include "chacon/metrics.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracle.hpp"

using chacon::Hierarchy;
using chacon::Rational;
using chacon::Word;
using chacon::hamming;
using chacon::zero_hamming;

namespace {
const Hierarchy& shared() {
  static const Hierarchy h(12);
  return h;
}
}  // namespace

TEST_CASE("hamming on the small cases") {
  CHECK(hamming(Word::from_string("01"), Word::from_string("01")) ==
        Rational(0));
  CHECK(hamming(Word::from_string("01"), Word::from_string("10")) ==
        Rational(1));
  CHECK(hamming(Word::from_string("00101"), Word::from_string("10010")) ==
        Rational(4, 5));
}

TEST_CASE("zero_hamming on the small cases") {
  CHECK(zero_hamming(Word::from_string("01"), Word::from_string("10")) ==
        Rational(1));
  CHECK(zero_hamming(Word::from_string("00101"), Word::from_string("10010")) ==
        Rational(2, 3));
  const Word alpha = Word::from_string("0010100");
  CHECK(zero_hamming(alpha, alpha) == Rational(0));
}

TEST_CASE("distance preconditions are hard errors") {
  CHECK_THROWS_AS(hamming(Word::from_string("01"), Word::from_string("011")),
                  std::invalid_argument);
  CHECK_THROWS_AS(hamming(Word(), Word()), std::invalid_argument);
  CHECK_THROWS_AS(zero_hamming(Word::from_string("11"),
                               Word::from_string("00")),
                  std::invalid_argument);
  CHECK_THROWS_AS(zero_hamming(Word::from_string("0"),
                               Word::from_string("01")),
                  std::invalid_argument);
}

TEST_CASE("distances agree with the character-wise oracle") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<size_t> len(1, 300);
  for (int round = 0; round < 200; ++round) {
    const size_t n = len(rng);
    const std::string a = oracle::random_binary(rng, n);
    const std::string b = oracle::random_binary(rng, n);
    const Word wa = Word::from_string(a);
    const Word wb = Word::from_string(b);

    const auto dh = oracle::hamming_counts(a, b);
    CHECK(hamming(wa, wb) == Rational(dh.hits, dh.base));

    const auto dz = oracle::zero_hamming_counts(a, b);
    if (dz.base > 0) {
      CHECK(zero_hamming(wa, wb) == Rational(dz.hits, dz.base));
    }
  }
}

TEST_CASE("distances stay within [0, 1] and denominators divide the bases") {
  std::mt19937 rng(43);
  for (int round = 0; round < 100; ++round) {
    const size_t n = 1 + round;
    const std::string a = "0" + oracle::random_binary(rng, n);
    const std::string b = oracle::random_binary(rng, n + 1);
    const Word wa = Word::from_string(a);
    const Word wb = Word::from_string(b);
    const Rational d = hamming(wa, wb);
    const Rational d0 = zero_hamming(wa, wb);
    CHECK(d >= Rational(0));
    CHECK(d <= Rational(1));
    CHECK(d0 >= Rational(0));
    CHECK(d0 <= Rational(1));
    CHECK(mpz_class(wa.size()) % d.denominator() == 0);
    CHECK(mpz_class(wa.count_zeros()) % d0.denominator() == 0);
  }
}

TEST_CASE("lemma1 closed form holds level by level") {
  const auto& h = shared();
  for (int n = 0; n <= 11; ++n) {
    const auto report = chacon::verify_lemma1(h, n);
    CHECK(report.passed);
    CHECK(report.computed_forward == report.predicted);
    CHECK(report.computed_reverse == report.predicted);
  }
  CHECK(chacon::verify_lemma1(h, 0).predicted == Rational(1));
  CHECK(chacon::verify_lemma1(h, 1).predicted == Rational(2, 3));
  CHECK(chacon::verify_lemma1(h, 3).predicted == Rational(14, 27));
  CHECK_THROWS_AS(chacon::verify_lemma1(h, 12), std::out_of_range);
}

TEST_CASE("equal-zero-count identities on the worked example") {
  const auto report = chacon::equal_zero_count_identities(
      Word::from_string("00101"), Word::from_string("10010"));
  CHECK(report.passed);
  CHECK(report.d == Rational(4, 5));
  CHECK(report.d0_forward == Rational(2, 3));
  CHECK(report.zero_share == Rational(3, 5));
  CHECK(report.d == Rational(2) * Rational(2, 3) * Rational(3, 5));
}

TEST_CASE("equal-zero-count identities on identical words") {
  const Word w = Word::from_string("0010100");
  const auto report = chacon::equal_zero_count_identities(w, w);
  CHECK(report.passed);
  CHECK(report.d == Rational(0));
  CHECK(report.d0_forward == Rational(0));
}

TEST_CASE("equal-zero-count identities on a shifted window of W") {
  const auto& h = shared();
  const auto report =
      chacon::equal_zero_count_identities(h.level(2), h.segment(3, 13));
  CHECK(report.passed);
}

TEST_CASE("unequal zero counts are rejected") {
  CHECK_THROWS_AS(chacon::equal_zero_count_identities(
                      Word::from_string("00"), Word::from_string("01")),
                  std::invalid_argument);
}

TEST_CASE("identities hold on random equal-zero-count pairs") {
  std::mt19937 rng(47);
  std::uniform_int_distribution<size_t> len(2, 120);
  for (int round = 0; round < 200; ++round) {
    std::string a = "0" + oracle::random_binary(rng, len(rng));
    std::string b = a;
    std::shuffle(b.begin(), b.end(), rng);  // same multiset of symbols
    const auto report = chacon::equal_zero_count_identities(
        Word::from_string(a), Word::from_string(b));
    CHECK(report.symmetric);
    CHECK(report.identity_holds);
  }
}

TEST_CASE("subword scan: the only other length-1 factor is 1") {
  const auto& h = shared();
  const auto result = chacon::min_zero_hamming_over_subwords(h, 0, 2);
  CHECK(result.minimum == Rational(1));
  CHECK(result.witness.to_string() == "1");
  CHECK(result.witness_position == 2);
}

TEST_CASE("subword scan minima, frozen from the exhaustive string oracle") {
  const auto& h = shared();

  const auto r1 = chacon::min_zero_hamming_over_subwords(h, 1, 4);
  CHECK(r1.minimum == Rational(1, 3));
  CHECK(r1.witness.to_string() == "0100");
  CHECK(r1.witness_position == 1);  // smallest-start tie break

  const auto r2 = chacon::min_zero_hamming_over_subwords(h, 2, 5);
  CHECK(r2.minimum == Rational(2, 9));
  CHECK(r2.witness.to_string() == "0010100100010");
  CHECK(r2.witness_position == 4);

  const auto r3 = chacon::min_zero_hamming_over_subwords(h, 3, 6);
  CHECK(r3.minimum == Rational(5, 27));
  CHECK(r3.witness_position == 13);
}

TEST_CASE("subword scan equals a freshly run string oracle") {
  const auto& h = shared();
  for (int n = 1; n <= 3; ++n) {
    const int sl = n + 3;
    const std::string wn = oracle::level(n);
    const std::string hay = oracle::level(sl);
    uint64_t best_hits = 0;
    uint64_t base = 0;
    bool found = false;
    uint64_t best_pos = 0;
    for (size_t s = 0; s + wn.size() <= hay.size(); ++s) {
      const std::string beta = hay.substr(s, wn.size());
      if (beta == wn) continue;
      const auto counts = oracle::zero_hamming_counts(wn, beta);
      if (!found || counts.hits < best_hits) {
        best_hits = counts.hits;
        base = counts.base;
        best_pos = s;
        found = true;
      }
    }
    REQUIRE(found);
    const auto result = chacon::min_zero_hamming_over_subwords(h, n, sl);
    CHECK(result.minimum == Rational(best_hits, base));
    CHECK(result.witness_position == best_pos);
  }
}

TEST_CASE("lemma2 bound holds with margin parameters") {
  const auto& h = shared();
  for (int n = 1; n <= 5; ++n) {
    const auto report = chacon::verify_lemma2(h, n, n + 3);
    CHECK(report.passed);
    CHECK(report.scan.minimum > Rational(1, 6));
  }
  CHECK_THROWS_AS(chacon::min_zero_hamming_over_subwords(h, 3, 3),
                  std::invalid_argument);
}
