#include "chacon/shift.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace chacon {

namespace {

mpz_class pow3(int k) {
  return integer_power(3, static_cast<unsigned long>(k));
}

uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

int anchor_level(uint64_t shift) {
  if (shift == 0) throw std::invalid_argument("shift must be positive");
  if (shift >= level_length(kMaxLevel)) {
    throw std::out_of_range("shift exceeds the supported position range");
  }
  int n = 0;
  while (level_length(n) <= shift) ++n;
  return n;
}

ShiftDecomposition decompose_at_level(const Hierarchy& hierarchy,
                                      uint64_t shift, int level) {
  if (shift == 0) throw std::invalid_argument("shift must be positive");
  if (level_length(level) <= shift) {
    throw std::invalid_argument("anchor level too small: shift " +
                                std::to_string(shift) + " >= |W_" +
                                std::to_string(level) + "|");
  }
  const Word& wn = hierarchy.level(level);
  const uint64_t len = wn.size();

  ShiftDecomposition dec;
  dec.shift = shift;
  dec.anchor = level;
  dec.beta1 = wn.slice(shift, len - shift);
  dec.beta1.append_range(wn, 0, shift);
  dec.beta2 = wn.slice(shift, len - shift);
  dec.beta2.push_back(1);
  dec.beta2.append_range(wn, 0, shift - 1);
  dec.d0_beta1 = zero_hamming(wn, dec.beta1);
  dec.d0_beta2 = zero_hamming(wn, dec.beta2);

  // The first occurrence of W_n in W (position 0) is followed by W_n,
  // the second (position |W_n|) by 1W_n; the windows they are compared
  // with must reproduce beta1 and beta2.
  if (dec.beta1 != hierarchy.segment(shift, len)) {
    throw std::logic_error("beta1 disagrees with the window read from W");
  }
  if (dec.beta2 != hierarchy.segment(len + shift, len)) {
    throw std::logic_error("beta2 disagrees with the window read from W");
  }
  return dec;
}

ShiftDecomposition decompose(const Hierarchy& hierarchy, uint64_t shift) {
  return decompose_at_level(hierarchy, shift, anchor_level(shift));
}

FollowTypeCounts follow_type_counts(const Hierarchy& hierarchy, int n, int k) {
  if (n < 0 || k < 0) {
    throw std::invalid_argument("level and offset must be nonnegative");
  }
  const Word& wn = hierarchy.level(n);
  const Word& prefix = hierarchy.level(n + k);
  const uint64_t len = wn.size();

  FollowTypeCounts counts;
  counts.n = n;
  counts.k = k;
  for (uint64_t p : occurrences(wn, prefix)) {
    if (hierarchy.segment(p + len, len) == wn) {
      ++counts.followed_by_word;
    } else if (letter_at(p + len) == 1 &&
               hierarchy.segment(p + len + 1, len) == wn) {
      ++counts.followed_by_one_word;
    } else {
      throw std::logic_error("occurrence of W_n followed by neither W_n nor 1W_n");
    }
  }
  return counts;
}

Rational finite_level_d0(const Hierarchy& hierarchy, uint64_t shift, int k) {
  if (k < 0) throw std::invalid_argument("level offset must be nonnegative");
  const ShiftDecomposition dec = decompose(hierarchy, shift);
  const mpz_class total = pow3(k);
  const mpz_class count_a = (total + 1) / 2;
  const mpz_class count_b = (total - 1) / 2;
  return (Rational(count_a, 1) * dec.d0_beta1 +
          Rational(count_b, 1) * dec.d0_beta2) /
         Rational(total, 1);
}

ShiftDistance limit_distance(const Hierarchy& hierarchy, uint64_t shift) {
  ShiftDistance dist;
  dist.decomposition = decompose(hierarchy, shift);
  dist.d0_limit =
      (dist.decomposition.d0_beta1 + dist.decomposition.d0_beta2) /
      Rational(2);
  dist.d_limit = Rational(4, 3) * dist.d0_limit;
  return dist;
}

std::vector<ProfileRow> profile(const Hierarchy& hierarchy, uint64_t first,
                                uint64_t last) {
  if (first == 0) throw std::invalid_argument("shifts must be positive");
  if (first > last) {
    throw std::invalid_argument("empty shift range " + std::to_string(first) +
                                ".." + std::to_string(last));
  }
  std::vector<ProfileRow> rows;
  rows.reserve(last - first + 1);
  for (uint64_t i = first; i <= last; ++i) {
    const ShiftDistance dist = limit_distance(hierarchy, i);
    rows.push_back({i, dist.d0_limit, dist.d_limit});
  }
  return rows;
}

Prop1Report verify_prop1(const Hierarchy& hierarchy, int max_level) {
  Prop1Report report;
  report.max_level = max_level;
  report.passed = true;
  const Rational d0_bound(1, 6);
  const Rational d_bound(2, 9);
  const uint64_t limit = level_length(max_level);

  bool have_min = false;
  for (uint64_t i = 1; i < limit; ++i) {
    const ShiftDistance dist = limit_distance(hierarchy, i);
    ++report.shifts_checked;
    if (!(dist.d0_limit > d0_bound) || !(dist.d_limit > d_bound)) {
      report.passed = false;
      if (report.failure.empty()) {
        report.failure = "shift " + std::to_string(i) + ": d0 = " +
                         dist.d0_limit.to_fraction_string() + ", d = " +
                         dist.d_limit.to_fraction_string();
      }
    }
    if (!have_min || dist.d0_limit < report.min_d0) {
      report.min_d0 = dist.d0_limit;
      report.min_d = dist.d_limit;
      report.argmin_shift = i;
      have_min = true;
    }
  }
  return report;
}

Prop2Report verify_prop2(const Hierarchy& hierarchy, int max_n) {
  if (max_n < 1) throw std::invalid_argument("verify_prop2 requires max_n >= 1");
  Prop2Report report;
  report.max_n = max_n;
  report.passed = true;
  for (int n = 1; n <= max_n; ++n) {
    Prop2Entry entry;
    entry.n = n;
    entry.shift = 2 * level_length(n - 1) + 1;
    const ShiftDistance dist = limit_distance(hierarchy, entry.shift);
    entry.d0 = dist.d0_limit;
    entry.d = dist.d_limit;
    entry.predicted_d0 = Rational(1, 6) + Rational(1, 2 * pow3(n));
    entry.predicted_d = Rational(2, 9) + Rational(2, pow3(n + 1));

    const Word& prev = hierarchy.level(n - 1);
    Word expected_b1;  // W_{n-1} W_{n-1} W_{n-1} 1
    expected_b1.append(prev);
    expected_b1.append(prev);
    expected_b1.append(prev);
    expected_b1.push_back(1);
    Word expected_b2;  // W_{n-1} 1 W_{n-1} W_{n-1}
    expected_b2.append(prev);
    expected_b2.push_back(1);
    expected_b2.append(prev);
    expected_b2.append(prev);
    entry.betas_match = dist.decomposition.anchor == n &&
                        dist.decomposition.beta1 == expected_b1 &&
                        dist.decomposition.beta2 == expected_b2;

    entry.passed = entry.betas_match && entry.d0 == entry.predicted_d0 &&
                   entry.d == entry.predicted_d;
    if (!entry.passed) report.passed = false;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

Lemma3Report verify_lemma3(const Hierarchy& hierarchy, uint64_t max_shift,
                           int samples) {
  if (samples < 1) throw std::invalid_argument("sample count must be positive");
  if (max_shift == 0) throw std::invalid_argument("max shift must be positive");
  if (max_shift >= level_length(hierarchy.cap() - 1)) {
    throw std::invalid_argument(
        "max shift too large for the cap: need at least two comparable "
        "levels above every anchor");
  }

  // Deterministic distinct sample of [1, max_shift].
  std::set<uint64_t> shifts;
  const uint64_t want =
      std::min<uint64_t>(static_cast<uint64_t>(samples), max_shift);
  uint64_t state = 0x00c1ac0f00c1ac0fULL;
  while (shifts.size() < want) {
    shifts.insert(1 + splitmix64(state) % max_shift);
  }

  Lemma3Report report;
  report.max_shift = max_shift;
  report.samples = static_cast<int>(want);
  report.passed = true;

  const Rational four_thirds(4, 3);
  auto fail = [&report](std::string what) {
    report.passed = false;
    if (report.failure.empty()) report.failure = std::move(what);
  };

  for (uint64_t shift : shifts) {
    const ShiftDistance dist = limit_distance(hierarchy, shift);
    if (dist.d_limit != four_thirds * dist.d0_limit) {
      fail("shift " + std::to_string(shift) + ": d != (4/3) d0 in the limit");
      continue;
    }
    const int anchor = dist.decomposition.anchor;
    const int top = std::min(hierarchy.cap(), anchor + 2);
    Rational previous_ratio;
    bool have_previous = false;
    for (int m = anchor; m <= top; ++m) {
      const Word& wm = hierarchy.level(m);
      const Word alpha = hierarchy.segment(shift, wm.size());
      const Rational d0 = zero_hamming(wm, alpha);
      const Rational d = hamming(wm, alpha);
      const Rational zero_share(level_zero_count(m), level_length(m));
      ++report.ratio_checks;

      if (finite_level_d0(hierarchy, shift, m - anchor) != d0) {
        fail("shift " + std::to_string(shift) + ", level " +
             std::to_string(m) + ": closed-form d0 disagrees with brute force");
        break;
      }
      if (d != Rational(2) * d0 * zero_share) {
        fail("shift " + std::to_string(shift) + ", level " +
             std::to_string(m) + ": zero-count identity violated");
        break;
      }
      if (d0 == Rational(0)) {
        fail("shift " + std::to_string(shift) + ", level " +
             std::to_string(m) + ": d0 vanished");
        break;
      }
      const Rational ratio = d / d0;
      const Rational predicted_ratio(4 * pow3(m), pow3(m + 1) - 1);
      if (ratio != predicted_ratio) {
        fail("shift " + std::to_string(shift) + ", level " +
             std::to_string(m) + ": d/d0 off the predicted ratio");
        break;
      }
      if (!(ratio > four_thirds) ||
          (have_previous && !(previous_ratio > ratio))) {
        fail("shift " + std::to_string(shift) + ", level " +
             std::to_string(m) + ": d/d0 not decreasing toward 4/3");
        break;
      }
      previous_ratio = ratio;
      have_previous = true;
    }
  }
  return report;
}

}  // namespace chacon
