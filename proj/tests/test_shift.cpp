#include "chacon/shift.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using chacon::Hierarchy;
using chacon::Rational;
using chacon::Word;
using chacon::anchor_level;
using chacon::decompose;
using chacon::decompose_at_level;
using chacon::finite_level_d0;
using chacon::level_length;
using chacon::limit_distance;

namespace {
const Hierarchy& shared() {
  static const Hierarchy h(12);
  return h;
}
}  // namespace

TEST_CASE("anchor level is the minimal level containing the shift") {
  CHECK(anchor_level(1) == 1);
  CHECK(anchor_level(3) == 1);
  CHECK(anchor_level(4) == 2);
  CHECK(anchor_level(9) == 2);
  CHECK(anchor_level(12) == 2);
  CHECK(anchor_level(13) == 3);
  CHECK_THROWS_AS(anchor_level(0), std::invalid_argument);
}

TEST_CASE("decompose at the worked shifts") {
  const auto& h = shared();

  const auto d3 = decompose(h, 3);
  CHECK(d3.anchor == 1);
  CHECK(d3.beta1.to_string() == "0001");
  CHECK(d3.beta2.to_string() == "0100");
  CHECK(d3.d0_beta1 == Rational(1, 3));
  CHECK(d3.d0_beta2 == Rational(1, 3));

  const auto d1 = decompose(h, 1);
  CHECK(d1.beta1.to_string() == "0100");
  CHECK(d1.beta2.to_string() == "0101");
  CHECK(d1.d0_beta1 == Rational(1, 3));
  CHECK(d1.d0_beta2 == Rational(2, 3));

  const auto d9 = decompose(h, 9);
  CHECK(d9.anchor == 2);
  CHECK(d9.d0_beta1 == Rational(2, 9));
  CHECK(d9.d0_beta2 == Rational(2, 9));
}

TEST_CASE("decomposition invariants over a sweep of shifts") {
  const auto& h = shared();
  for (uint64_t i = 1; i < level_length(6); ++i) {
    const auto dec = decompose(h, i);  // also runs the window cross-check
    const uint64_t len = level_length(dec.anchor);
    CHECK(i < len);
    CHECK(dec.anchor >= 1);
    CHECK(i >= level_length(dec.anchor - 1));
    CHECK(dec.beta1.size() == len);
    CHECK(dec.beta2.size() == len);
    CHECK(dec.beta1 != dec.beta2);
    CHECK(dec.d0_beta1 > Rational(1, 6));
    CHECK(dec.d0_beta2 > Rational(1, 6));
  }
}

TEST_CASE("the limit does not depend on the anchor choice") {
  const auto& h = shared();
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<uint64_t> pick(1, level_length(7) - 1);
  for (int round = 0; round < 40; ++round) {
    const uint64_t shift = pick(rng);
    const int n = anchor_level(shift);
    const auto at_n = decompose_at_level(h, shift, n);
    const auto at_n1 = decompose_at_level(h, shift, n + 1);
    const Rational limit_n = (at_n.d0_beta1 + at_n.d0_beta2) / Rational(2);
    const Rational limit_n1 = (at_n1.d0_beta1 + at_n1.d0_beta2) / Rational(2);
    CHECK(limit_n == limit_n1);
  }
}

TEST_CASE("follow types: first levels") {
  const auto& h = shared();
  for (int n = 0; n <= 3; ++n) {
    const auto c0 = chacon::follow_type_counts(h, n, 0);
    CHECK(c0.followed_by_word == 1);
    CHECK(c0.followed_by_one_word == 0);
  }
  const auto c11 = chacon::follow_type_counts(h, 1, 1);
  CHECK(c11.followed_by_word == 2);
  CHECK(c11.followed_by_one_word == 1);
  const auto c13 = chacon::follow_type_counts(h, 1, 3);
  CHECK(c13.followed_by_word == 14);
  CHECK(c13.followed_by_one_word == 13);
}

TEST_CASE("follow types: closed form (3^k+1)/2, (3^k-1)/2") {
  const auto& h = shared();
  for (int n = 0; n <= 3; ++n) {
    for (int k = 0; k <= 4; ++k) {
      const auto counts = chacon::follow_type_counts(h, n, k);
      const uint64_t total = chacon::level_zero_count(k);  // 3^k
      CHECK(counts.followed_by_word == (total + 1) / 2);
      CHECK(counts.followed_by_one_word == (total - 1) / 2);
      CHECK(counts.followed_by_word - counts.followed_by_one_word == 1);
    }
  }
}

TEST_CASE("finite-level d0 at the worked shifts") {
  const auto& h = shared();
  CHECK(finite_level_d0(h, 3, 0) == Rational(1, 3));
  CHECK(finite_level_d0(h, 1, 1) == Rational(4, 9));
  CHECK(finite_level_d0(h, 3, 1) == Rational(1, 3));
}

TEST_CASE("finite-level d0 equals brute force on materialized words") {
  const auto& h = shared();
  for (uint64_t i = 1; i < level_length(2); ++i) {
    const int n = anchor_level(i);
    for (int k = 0; n + k <= 6; ++k) {
      const Word& wm = h.level(n + k);
      const Word alpha = h.segment(i, wm.size());
      CHECK(finite_level_d0(h, i, k) == chacon::zero_hamming(wm, alpha));
    }
  }
}

TEST_CASE("finite-level error term is exactly |d01 - d02| / (2*3^k)") {
  const auto& h = shared();
  for (uint64_t i : {1, 2, 3, 5, 9, 11, 27, 100}) {
    const auto dist = limit_distance(h, i);
    const Rational gap =
        abs(dist.decomposition.d0_beta1 - dist.decomposition.d0_beta2);
    for (int k = 0; k <= 6; ++k) {
      const Rational error = abs(finite_level_d0(h, i, k) - dist.d0_limit);
      CHECK(error == gap / Rational(2 * chacon::integer_power(3, k), 1));
    }
  }
}

TEST_CASE("limit distances at the worked shifts") {
  const auto& h = shared();

  const auto at3 = limit_distance(h, 3);
  CHECK(at3.d0_limit == Rational(1, 3));
  CHECK(at3.d_limit == Rational(4, 9));

  const auto at9 = limit_distance(h, 9);
  CHECK(at9.d0_limit == Rational(2, 9));
  CHECK(at9.d_limit == Rational(8, 27));

  const auto at1 = limit_distance(h, 1);
  CHECK(at1.d0_limit == Rational(1, 2));
  CHECK(at1.d_limit == Rational(2, 3));

  const auto at27 = limit_distance(h, 27);
  CHECK(at27.d0_limit == Rational(1, 6) + Rational(1, 54));
  CHECK(at27.d_limit == Rational(2, 9) + Rational(2, 81));
}

TEST_CASE("finite levels converge to the limit at shift 1") {
  const auto& h = shared();
  for (int k = 0; k <= 8; ++k) {
    const Rational expected =
        Rational(1, 2) -
        Rational(1, 2 * chacon::integer_power(3, k + 1));
    CHECK(finite_level_d0(h, 1, k) == expected);
  }
}

TEST_CASE("d is exactly four thirds of d0 in the limit") {
  const auto& h = shared();
  for (uint64_t i = 1; i <= 200; ++i) {
    const auto dist = limit_distance(h, i);
    CHECK(dist.d_limit == Rational(4, 3) * dist.d0_limit);
  }
}

TEST_CASE("profile rows over small ranges") {
  const auto& h = shared();
  const auto rows = chacon::profile(h, 1, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].shift == 1);
  CHECK(rows[0].d0_limit == Rational(1, 2));
  CHECK(rows[0].d_limit == Rational(2, 3));
  CHECK(rows[1].d0_limit == Rational(1, 3));
  CHECK(rows[2].shift == 3);
  CHECK(rows[2].d0_limit == Rational(1, 3));
  CHECK(rows[2].d_limit == Rational(4, 9));

  const auto single = chacon::profile(h, 9, 9);
  REQUIRE(single.size() == 1);
  CHECK(single[0].d0_limit == Rational(2, 9));
  CHECK(single[0].d_limit == Rational(8, 27));

  CHECK_THROWS_AS(chacon::profile(h, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(chacon::profile(h, 0, 4), std::invalid_argument);
}

TEST_CASE("prop1 verification reports sharp minima") {
  const auto& h = shared();

  const auto level1 = chacon::verify_prop1(h, 1);
  CHECK(level1.passed);
  CHECK(level1.shifts_checked == 3);
  CHECK(level1.min_d0 == Rational(1, 3));
  // shifts 2 and 3 both attain 1/3; ties resolve to the smallest shift
  CHECK(level1.argmin_shift == 2);
  CHECK(limit_distance(h, 3).d0_limit == level1.min_d0);

  const auto level2 = chacon::verify_prop1(h, 2);
  CHECK(level2.passed);
  CHECK(level2.shifts_checked == 12);
  CHECK(level2.min_d0 == Rational(2, 9));
  CHECK(level2.argmin_shift == 9);

  const auto level3 = chacon::verify_prop1(h, 3);
  CHECK(level3.passed);
  CHECK(level3.min_d0 == Rational(5, 27));
  CHECK(level3.argmin_shift == 27);
}

TEST_CASE("prop2 closed forms hold with matching betas") {
  const auto& h = shared();
  const auto report = chacon::verify_prop2(h, 6);
  CHECK(report.passed);
  REQUIRE(report.entries.size() == 6);
  CHECK(report.entries[0].shift == 3);
  CHECK(report.entries[0].d0 == Rational(1, 3));
  CHECK(report.entries[0].d == Rational(4, 9));
  CHECK(report.entries[1].shift == 9);
  CHECK(report.entries[1].d0 == Rational(2, 9));
  CHECK(report.entries[1].d == Rational(8, 27));
  CHECK(report.entries[3].shift == 81);
  CHECK(report.entries[3].d0 == Rational(1, 6) + Rational(1, 162));
  CHECK(report.entries[3].d == Rational(2, 9) + Rational(2, 243));
  for (const auto& entry : report.entries) {
    CHECK(entry.betas_match);
    CHECK(entry.d0 == entry.predicted_d0);
    CHECK(entry.d == entry.predicted_d);
  }
}

TEST_CASE("lemma3 verifier passes on sampled shifts") {
  const auto& h = shared();
  const auto report = chacon::verify_lemma3(h, 10000, 25);
  CHECK(report.passed);
  CHECK(report.samples == 25);
  CHECK(report.failure.empty());
  CHECK(report.ratio_checks >= 25 * 2);
  CHECK_THROWS_AS(chacon::verify_lemma3(h, level_length(11), 5),
                  std::invalid_argument);
}

TEST_CASE("shift domain errors") {
  const auto& h = shared();
  CHECK_THROWS_AS(decompose(h, 0), std::invalid_argument);
  CHECK_THROWS_AS(finite_level_d0(h, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(decompose_at_level(h, 9, 1), std::invalid_argument);
  // shift anchored above the cap
  CHECK_THROWS_AS(decompose(h, level_length(12)), std::out_of_range);
}

TEST_CASE("decompose works with the anchor at the cap itself") {
  const auto& h = shared();
  const auto dec = decompose(h, level_length(11));  // anchor 12 == cap
  CHECK(dec.anchor == 12);
  CHECK(dec.beta1.size() == level_length(12));
  CHECK(dec.d0_beta1 > Rational(1, 6));
  CHECK(dec.d0_beta2 > Rational(1, 6));
}
