// chacon: exact analysis of the Chacon word W = 0010 0010 1 0010 ...
//
// Subcommands
//   generate  print W_n or a window of the infinite word W
//   distance  d0/d between W and a shifted copy of W (limit or finite level)
//   profile   tabulate limit distances over a range of shifts
//   measure   cylinder-set frequencies fr(pattern, W_n)
//   verify    machine-check the library's structural and distance claims
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "chacon/hierarchy.hpp"
#include "chacon/measure.hpp"
#include "chacon/metrics.hpp"
#include "chacon/rational.hpp"
#include "chacon/shift.hpp"
#include "chacon/word.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using chacon::Hierarchy;
using chacon::Rational;
using chacon::Word;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kDecimalDigits = 12;
constexpr uint64_t kDisplayLimit = 64;

std::string decimal(const Rational& r) {
  return chacon::to_decimal_string(r, kDecimalDigits);
}

std::string fraction(const Rational& r) { return r.to_fraction_string(); }

// "a:b" -> (a, b). Whether the range is half-open (positions) or
// inclusive (shifts, levels) is up to the caller.
std::pair<uint64_t, uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("range must have the form a:b, got '" + text +
                                "'");
  }
  uint64_t first = 0;
  uint64_t second = 0;
  const char* begin = text.data();
  auto r1 = std::from_chars(begin, begin + colon, first);
  auto r2 =
      std::from_chars(begin + colon + 1, begin + text.size(), second);
  if (r1.ec != std::errc{} || r1.ptr != begin + colon ||
      r2.ec != std::errc{} || r2.ptr != begin + text.size()) {
    throw std::invalid_argument("range must have the form a:b, got '" + text +
                                "'");
  }
  return {first, second};
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + output_path);
  }
  file << text;
  if (!file) {
    throw std::runtime_error("failed while writing: " + output_path);
  }
}

std::string display_word(const Word& w) {
  if (w.size() <= kDisplayLimit) return w.to_string();
  return w.slice(0, kDisplayLimit).to_string() + "... (" +
         std::to_string(w.size()) + " symbols)";
}

int64_t json_int(const mpz_class& z) {
  if (!z.fits_slong_p()) {
    throw std::runtime_error("value too large for JSON integer output");
  }
  return static_cast<int64_t>(z.get_si());
}

void add_rational_fields(ordered_json& j, const std::string& prefix,
                         const Rational& r) {
  j[prefix + "_num"] = json_int(r.numerator());
  j[prefix + "_den"] = json_int(r.denominator());
}

// ---------------------------------------------------------------------------
// generate

int run_generate(const Hierarchy& hierarchy, int level, bool have_level,
                 const std::string& range, const std::string& output) {
  if (have_level == !range.empty()) {
    throw std::invalid_argument("pass exactly one of --level or --range");
  }
  std::string text;
  if (have_level) {
    text = hierarchy.level(level).to_string();
  } else {
    const auto [first, last] = parse_range(range);  // half-open positions
    if (last < first) {
      throw std::invalid_argument("inverted position range");
    }
    text = hierarchy.segment(first, last - first).to_string();
  }
  emit(text + "\n", output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// distance

int run_distance(const Hierarchy& hierarchy, uint64_t shift, int k,
                 bool have_k, const std::string& format,
                 const std::string& output) {
  const chacon::ShiftDistance dist = chacon::limit_distance(hierarchy, shift);
  const auto& dec = dist.decomposition;
  const int level = dec.anchor + (have_k ? k : 0);

  Rational d0 = dist.d0_limit;
  Rational d = dist.d_limit;
  if (have_k) {
    d0 = chacon::finite_level_d0(hierarchy, shift, k);
    // d(W_m, alpha_m) via the equal-zero-count identity.
    d = Rational(2) * d0 *
        Rational(chacon::level_zero_count(level),
                 chacon::level_length(level));
  }

  std::ostringstream out;
  if (format == "table") {
    out << "shift " << shift << ": anchor n = " << dec.anchor << "\n";
    out << "beta1 = " << display_word(dec.beta1) << "\n";
    out << "beta2 = " << display_word(dec.beta2) << "\n";
    out << "d0(W_n, beta1) = " << fraction(dec.d0_beta1) << " ("
        << decimal(dec.d0_beta1) << ")\n";
    out << "d0(W_n, beta2) = " << fraction(dec.d0_beta2) << " ("
        << decimal(dec.d0_beta2) << ")\n";
    if (have_k) {
      out << "level " << level << " (k = " << k << "):\n";
      out << "d0(W_" << level << ", alpha_" << level << ") = " << fraction(d0)
          << " (" << decimal(d0) << ")\n";
      out << "d(W_" << level << ", alpha_" << level << ") = " << fraction(d)
          << " (" << decimal(d) << ")\n";
    } else {
      out << "d0(W, sigma^" << shift << " W) = " << fraction(d0) << " ("
          << decimal(d0) << ")\n";
      out << "d(W, sigma^" << shift << " W) = " << fraction(d) << " ("
          << decimal(d) << ")\n";
    }
  } else if (format == "csv") {
    out << "shift,anchor,d0_num,d0_den,d_num,d_den,d0_decimal,d_decimal\n";
    out << shift << "," << dec.anchor << "," << d0.numerator() << ","
        << d0.denominator() << "," << d.numerator() << "," << d.denominator()
        << "," << decimal(d0) << "," << decimal(d) << "\n";
  } else {
    ordered_json j;
    j["shift"] = shift;
    j["anchor"] = dec.anchor;
    if (have_k) j["k"] = k;
    add_rational_fields(j, "d0", d0);
    add_rational_fields(j, "d", d);
    j["d0_decimal"] = decimal(d0);
    j["d_decimal"] = decimal(d);
    out << j.dump(2) << "\n";
  }
  emit(out.str(), output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// profile

int run_profile(const Hierarchy& hierarchy, const std::string& shifts,
                const std::string& format, const std::string& output) {
  const auto [first, last] = parse_range(shifts);  // inclusive shift range
  const auto rows = chacon::profile(hierarchy, first, last);

  std::ostringstream out;
  if (format == "csv") {
    out << "shift,d0_num,d0_den,d_num,d_den,d0_decimal,d_decimal\n";
    for (const auto& row : rows) {
      out << row.shift << "," << row.d0_limit.numerator() << ","
          << row.d0_limit.denominator() << "," << row.d_limit.numerator()
          << "," << row.d_limit.denominator() << "," << decimal(row.d0_limit)
          << "," << decimal(row.d_limit) << "\n";
    }
  } else if (format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
      ordered_json j;
      j["shift"] = row.shift;
      add_rational_fields(j, "d0", row.d0_limit);
      add_rational_fields(j, "d", row.d_limit);
      j["d0_decimal"] = decimal(row.d0_limit);
      j["d_decimal"] = decimal(row.d_limit);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
  } else {
    size_t shift_w = 5, d0_w = 2, d_w = 1;
    for (const auto& row : rows) {
      shift_w = std::max(shift_w, std::to_string(row.shift).size());
      d0_w = std::max(d0_w, fraction(row.d0_limit).size());
      d_w = std::max(d_w, fraction(row.d_limit).size());
    }
    auto pad = [](const std::string& s, size_t w) {
      return s + std::string(w - s.size(), ' ');
    };
    out << pad("shift", shift_w) << "  " << pad("d0", d0_w) << "  "
        << pad("d", d_w) << "  " << pad("d0_decimal", 14) << "  d_decimal\n";
    for (const auto& row : rows) {
      out << pad(std::to_string(row.shift), shift_w) << "  "
          << pad(fraction(row.d0_limit), d0_w) << "  "
          << pad(fraction(row.d_limit), d_w) << "  "
          << pad(decimal(row.d0_limit), 14) << "  " << decimal(row.d_limit)
          << "\n";
    }
  }
  emit(out.str(), output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// measure

int run_measure(const Hierarchy& hierarchy, const std::string& pattern_text,
                const std::string& levels, const std::string& format,
                const std::string& output) {
  if (pattern_text.empty()) {
    throw std::invalid_argument("pattern must be nonempty");
  }
  const Word pattern = Word::from_string(pattern_text);
  const auto [first, last] = parse_range(levels);  // inclusive level range
  if (first > last) throw std::invalid_argument("empty level range");
  if (last > static_cast<uint64_t>(hierarchy.cap())) {
    throw std::invalid_argument("level range exceeds the materialization cap " +
                                std::to_string(hierarchy.cap()));
  }
  const auto sequence = chacon::measure_estimate(
      hierarchy, pattern, static_cast<int>(first), static_cast<int>(last));

  // Per-level successive differences; the last one is the convergence
  // summary.
  std::vector<Rational> diffs(sequence.values.size());
  for (size_t i = 1; i < sequence.values.size(); ++i) {
    diffs[i] =
        chacon::abs(sequence.values[i].value - sequence.values[i - 1].value);
  }

  std::ostringstream out;
  if (format == "csv") {
    out << "level,fr_num,fr_den,fr_decimal,diff_num,diff_den,diff_decimal\n";
    for (size_t i = 0; i < sequence.values.size(); ++i) {
      const auto& entry = sequence.values[i];
      out << entry.level << "," << entry.value.numerator() << ","
          << entry.value.denominator() << "," << decimal(entry.value) << ",";
      if (i == 0) {
        out << ",,";
      } else {
        out << diffs[i].numerator() << "," << diffs[i].denominator() << ","
            << decimal(diffs[i]);
      }
      out << "\n";
    }
  } else if (format == "json") {
    ordered_json j;
    j["pattern"] = pattern_text;
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < sequence.values.size(); ++i) {
      const auto& entry = sequence.values[i];
      ordered_json row;
      row["level"] = entry.level;
      add_rational_fields(row, "fr", entry.value);
      row["fr_decimal"] = decimal(entry.value);
      if (i > 0) {
        add_rational_fields(row, "diff", diffs[i]);
        row["diff_decimal"] = decimal(diffs[i]);
      }
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    add_rational_fields(j, "final", sequence.final_value);
    j["final_decimal"] = decimal(sequence.final_value);
    if (sequence.last_difference) {
      add_rational_fields(j, "last_difference", *sequence.last_difference);
      j["last_difference_decimal"] = decimal(*sequence.last_difference);
    } else {
      j["last_difference_num"] = nullptr;
      j["last_difference_den"] = nullptr;
      j["last_difference_decimal"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "pattern: " << pattern_text << "\n";
    for (size_t i = 0; i < sequence.values.size(); ++i) {
      const auto& entry = sequence.values[i];
      out << "level " << entry.level << ": fr = " << fraction(entry.value)
          << " (" << decimal(entry.value) << ")";
      if (i > 0) {
        out << "  diff = " << fraction(diffs[i]) << " (" << decimal(diffs[i])
            << ")";
      }
      out << "\n";
    }
    out << "final value: " << fraction(sequence.final_value) << " ("
        << decimal(sequence.final_value) << ")\n";
    if (sequence.last_difference) {
      out << "last successive difference: "
          << fraction(*sequence.last_difference) << " ("
          << decimal(*sequence.last_difference) << ")\n";
    } else {
      out << "last successive difference: n/a (single level)\n";
    }
    out << "note: the cylinder measure is shift invariant; it does not "
           "depend on the occurrence position\n";
  }
  emit(out.str(), output);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyRun {
  std::ostringstream out;
  bool all_passed = true;

  void record(bool passed, const std::string& line) {
    out << (passed ? "PASS " : "FAIL ") << line << "\n";
    if (!passed) all_passed = false;
  }
};

void verify_structure(VerifyRun& run, const Hierarchy& hierarchy, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const auto report = chacon::check_structure(hierarchy, n);
    if (report.all_passed) {
      run.record(true, "structure n=" + std::to_string(n) + ": " +
                           std::to_string(report.checks.size()) +
                           " facts hold");
    } else {
      for (const auto& check : report.checks) {
        if (!check.passed) {
          run.record(false, "structure n=" + std::to_string(n) + ": " +
                                check.fact +
                                (check.detail.empty() ? ""
                                                      : " (" + check.detail +
                                                            ")"));
        }
      }
    }
  }
}

void verify_lemma0(VerifyRun& run, const Hierarchy& hierarchy, int max_n,
                   int max_k) {
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 0; k <= max_k && n + k <= hierarchy.cap(); ++k) {
      const auto check = chacon::check_occurrence_count(hierarchy, n, k);
      run.record(check.passed,
                 "lemma0 n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     ": " + std::to_string(check.found) + " occurrences of W_" +
                     std::to_string(n) + " in W_" + std::to_string(n + k) +
                     " (expected " + std::to_string(check.expected) + ")");
    }
  }
}

void verify_lemma1(VerifyRun& run, const Hierarchy& hierarchy, int max_n) {
  for (int n = 0; n <= max_n; ++n) {
    const auto report = chacon::verify_lemma1(hierarchy, n);
    run.record(report.passed,
               "lemma1 n=" + std::to_string(n) + ": d0(W_n 1, 1 W_n) = " +
                   fraction(report.computed_forward) +
                   ", d0(1 W_n, W_n 1) = " +
                   fraction(report.computed_reverse) + ", predicted " +
                   fraction(report.predicted));
  }
}

void verify_lemma2(VerifyRun& run, const Hierarchy& hierarchy, int n,
                   int search_level) {
  const auto report = chacon::verify_lemma2(hierarchy, n, search_level);
  run.record(report.passed,
             "lemma2 n=" + std::to_string(n) +
                 " search_level=" + std::to_string(search_level) +
                 ": min d0(W_n, beta) = " + fraction(report.scan.minimum) +
                 (report.passed ? " > 1/6" : " <= 1/6") + ", witness at " +
                 std::to_string(report.scan.witness_position) + " (" +
                 display_word(report.scan.witness) + "), " +
                 std::to_string(report.scan.candidates) +
                 " candidates examined");
}

void verify_lemma3(VerifyRun& run, const Hierarchy& hierarchy,
                   uint64_t max_shift, int samples) {
  const auto report = chacon::verify_lemma3(hierarchy, max_shift, samples);
  run.record(report.passed,
             "lemma3: d = (4/3) d0 on " + std::to_string(report.samples) +
                 " sampled shifts <= " + std::to_string(report.max_shift) +
                 "; " + std::to_string(report.ratio_checks) +
                 " finite-level d/d0 ratios match 4*3^m/(3^(m+1)-1)" +
                 (report.failure.empty() ? "" : " [" + report.failure + "]"));
}

void verify_prop1(VerifyRun& run, const Hierarchy& hierarchy, int max_level) {
  const auto report = chacon::verify_prop1(hierarchy, max_level);
  run.record(report.passed,
             "prop1: " + std::to_string(report.shifts_checked) +
                 " shifts in [1, |W_" + std::to_string(max_level) +
                 "|) all have d0 > 1/6 and d > 2/9; min d0 = " +
                 fraction(report.min_d0) + " at shift " +
                 std::to_string(report.argmin_shift) +
                 (report.failure.empty() ? "" : " [" + report.failure + "]"));
}

void verify_prop2(VerifyRun& run, const Hierarchy& hierarchy, int max_n) {
  const auto report = chacon::verify_prop2(hierarchy, max_n);
  for (const auto& entry : report.entries) {
    run.record(entry.passed,
               "prop2 n=" + std::to_string(entry.n) + " (shift " +
                   std::to_string(entry.shift) + "): d0 = " +
                   fraction(entry.d0) + " predicted " +
                   fraction(entry.predicted_d0) + ", d = " +
                   fraction(entry.d) + " predicted " +
                   fraction(entry.predicted_d) +
                   (entry.betas_match ? ", betas match" : ", betas DIFFER"));
  }
}

int run_verify(const Hierarchy& hierarchy, const std::string& target,
               int max_n, int single_n, int search_level, int max_k,
               int max_level, int samples, int64_t max_shift,
               const std::string& output) {
  const int cap = hierarchy.cap();
  VerifyRun run;

  // Negative bound values mean "per-target default".
  auto value_or = [](int value, int fallback) {
    return value >= 0 ? value : fallback;
  };

  if (target == "structure") {
    verify_structure(run, hierarchy, value_or(max_n, std::min(10, cap)));
  } else if (target == "lemma0") {
    verify_lemma0(run, hierarchy, value_or(max_n, std::min(5, cap)),
                  value_or(max_k, 5));
  } else if (target == "lemma1") {
    verify_lemma1(run, hierarchy, value_or(max_n, std::min(10, cap - 1)));
  } else if (target == "lemma2") {
    if (single_n >= 0) {
      verify_lemma2(run, hierarchy, single_n,
                    search_level >= 0 ? search_level
                                      : std::min(single_n + 3, cap));
    } else {
      const int top = value_or(max_n, std::min(5, cap - 3));
      for (int n = 1; n <= top; ++n) {
        verify_lemma2(run, hierarchy, n, std::min(n + 3, cap));
      }
    }
  } else if (target == "lemma3") {
    const uint64_t bound =
        max_shift >= 0 ? static_cast<uint64_t>(max_shift)
                       : std::min<uint64_t>(100000,
                                            chacon::level_length(cap - 1) - 1);
    verify_lemma3(run, hierarchy, bound, value_or(samples, 50));
  } else if (target == "prop1") {
    verify_prop1(run, hierarchy, value_or(max_level, std::min(5, cap)));
  } else if (target == "prop2") {
    verify_prop2(run, hierarchy, value_or(max_n, std::min(8, cap)));
  } else if (target == "all") {
    verify_structure(run, hierarchy, std::min(10, cap));
    verify_lemma0(run, hierarchy, std::min(5, cap), 5);
    verify_lemma1(run, hierarchy, std::min(10, cap - 1));
    for (int n = 1; n <= std::min(5, cap - 3); ++n) {
      verify_lemma2(run, hierarchy, n, n + 3);
    }
    verify_lemma3(
        run, hierarchy,
        std::min<uint64_t>(100000, chacon::level_length(cap - 1) - 1), 50);
    verify_prop1(run, hierarchy, std::min(5, cap));
    verify_prop2(run, hierarchy, std::min(8, cap));
  } else {
    throw std::invalid_argument(
        "unknown verify target '" + target +
        "' (expected structure, lemma0, lemma1, lemma2, lemma3, prop1, "
        "prop2 or all)");
  }

  run.out << (run.all_passed ? "all claims hold\n"
                             : "verification FAILED\n");
  emit(run.out.str(), output);
  return run.all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact distances and verified structure of the Chacon word"};
  app.require_subcommand(1);
  app.fallthrough(true);

  int cap = chacon::kDefaultCap;
  auto* cap_option =
      app.add_option("--cap", cap, "materialization cap for explicit levels "
                                   "W_n (or environment CHACON_CAP)")
          ->check(CLI::Range(4, chacon::kMaxCap));

  // generate
  auto* generate = app.add_subcommand(
      "generate", "print W_n (--level) or W[a..b) (--range, half-open)");
  int gen_level = 0;
  std::string gen_range;
  std::string gen_output;
  auto* gen_level_opt =
      generate->add_option("--level", gen_level, "level n of W_n")
          ->check(CLI::NonNegativeNumber);
  generate->add_option("--range", gen_range,
                       "half-open position range a:b in the infinite word");
  generate->add_option("--output", gen_output, "write to file instead of stdout");

  // distance
  auto* distance = app.add_subcommand(
      "distance", "d0 and d between W and sigma^i W, exact");
  uint64_t dist_shift = 0;
  int dist_k = 0;
  std::string dist_format = "table";
  std::string dist_output;
  distance->add_option("--shift", dist_shift, "shift i >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* dist_k_opt =
      distance->add_option("--k", dist_k,
                           "report the finite-level value at level n+k "
                           "instead of the limit")
          ->check(CLI::NonNegativeNumber);
  distance->add_option("--format", dist_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  distance->add_option("--output", dist_output, "write to file instead of stdout");

  // profile
  auto* profile = app.add_subcommand(
      "profile", "limit distances for every shift in an inclusive range");
  std::string prof_shifts;
  std::string prof_format = "table";
  std::string prof_output;
  profile->add_option("--shifts", prof_shifts, "inclusive shift range a:b")
      ->required();
  profile->add_option("--format", prof_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  profile->add_option("--output", prof_output, "write to file instead of stdout");

  // measure
  auto* measure = app.add_subcommand(
      "measure", "cylinder-set frequencies fr(pattern, W_n) over levels");
  std::string meas_pattern;
  std::string meas_levels;
  std::string meas_format = "table";
  std::string meas_output;
  measure->add_option("--pattern", meas_pattern, "pattern over {0,1}")
      ->required();
  measure->add_option("--levels", meas_levels, "inclusive level range a:b")
      ->required();
  measure->add_option("--format", meas_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  measure->add_option("--output", meas_output, "write to file instead of stdout");

  // verify
  auto* verify = app.add_subcommand(
      "verify",
      "check structural facts and distance claims; exit 1 on failure");
  std::string verify_target;
  int verify_max_n = -1;
  int verify_n = -1;
  int verify_search_level = -1;
  int verify_max_k = -1;
  int verify_max_level = -1;
  int verify_samples = -1;
  int64_t verify_max_shift = -1;
  std::string verify_output;
  verify
      ->add_option("target", verify_target,
                   "structure, lemma0, lemma1, lemma2, lemma3, prop1, prop2 "
                   "or all")
      ->required();
  verify->add_option("--max-n", verify_max_n, "largest n checked");
  verify->add_option("--n", verify_n, "single n (lemma2)");
  verify->add_option("--search-level", verify_search_level,
                     "haystack level for the lemma2 scan (default n+3)");
  verify->add_option("--max-k", verify_max_k, "largest k checked (lemma0)");
  verify->add_option("--max-level", verify_max_level,
                     "shifts range over [1, |W_max_level|) (prop1)");
  verify->add_option("--samples", verify_samples, "sample count (lemma3)");
  verify->add_option("--max-shift", verify_max_shift,
                     "largest sampled shift (lemma3)");
  verify->add_option("--output", verify_output,
                     "write the report to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  // Flags beat the environment, the environment beats the default.
  if (cap_option->count() == 0) {
    if (const char* env = std::getenv("CHACON_CAP")) {
      const std::string text(env);
      int value = 0;
      const auto parsed =
          std::from_chars(text.data(), text.data() + text.size(), value);
      if (parsed.ec != std::errc{} || parsed.ptr != text.data() + text.size() ||
          value < 4 || value > chacon::kMaxCap) {
        std::cerr << "error: CHACON_CAP must be an integer in [4, "
                  << chacon::kMaxCap << "], got '" << text << "'\n";
        return kExitUsage;
      }
      cap = value;
    }
  }

  try {
    const Hierarchy hierarchy(cap);
    if (generate->parsed()) {
      return run_generate(hierarchy, gen_level, gen_level_opt->count() > 0,
                          gen_range, gen_output);
    }
    if (distance->parsed()) {
      return run_distance(hierarchy, dist_shift, dist_k,
                          dist_k_opt->count() > 0, dist_format, dist_output);
    }
    if (profile->parsed()) {
      return run_profile(hierarchy, prof_shifts, prof_format, prof_output);
    }
    if (measure->parsed()) {
      return run_measure(hierarchy, meas_pattern, meas_levels, meas_format,
                         meas_output);
    }
    if (verify->parsed()) {
      return run_verify(hierarchy, verify_target, verify_max_n, verify_n,
                        verify_search_level, verify_max_k, verify_max_level,
                        verify_samples, verify_max_shift, verify_output);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
