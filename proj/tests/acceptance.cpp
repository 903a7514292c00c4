// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "stallings/altform.hpp"
#include "stallings/bench.hpp"
#include "stallings/dyadic.hpp"
#include "stallings/engine.hpp"
#include "stallings/errors.hpp"
#include "stallings/fxf.hpp"
#include "stallings/generate.hpp"

using namespace stallings;

namespace {

// Pinned tolerances.
constexpr std::size_t kSoundnessWords = 1000;
constexpr std::size_t kSoundnessMaxLength = 256;
constexpr std::uint64_t kAllowedFailures = 0;
constexpr std::size_t kDafRandomWords = 10000;
constexpr std::size_t kDafRandomMaxLength = 512;
constexpr std::size_t kDafExhaustiveLength = 8;
constexpr std::size_t kDafLengthFactor = 10;
constexpr std::int64_t kDyadicRange = 256;
constexpr std::int64_t kDyadicBruteMax = 32;
constexpr std::size_t kPafCases = 10000;
constexpr std::size_t kPafMaxLength = 128;
constexpr std::size_t kDeciderWords = 2000;
constexpr std::size_t kDeciderMaxLength = 64;
constexpr std::size_t kScalingMin = 64;
constexpr std::size_t kScalingMax = 4096;
constexpr std::size_t kScalingSeeds = 5;
constexpr double kSlopeLow = 1.0;
constexpr double kSlopeHigh = 2.2;
constexpr double kMaxRatio = 1.0;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail, double seconds) {
  std::printf("criterion %d %s: %s (%s; %.1fs)\n", id, name, pass ? "PASS" : "FAIL",
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// 1-4 share one suite of reductions.

struct SuiteTotals {
  std::uint64_t words = 0;
  std::uint64_t replay_failures = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t lemma_calls = 0;
  std::uint64_t lemma_unchecked = 0;
  std::uint64_t lemma_violations = 0;
  std::uint64_t length_violations = 0;
  std::uint64_t max_n = 0;
  double worst_total_ratio = 0;
  double worst_length_ratio = 0;
  std::string first_error;
};

SuiteTotals run_suite() {
  SuiteTotals s;
  const BoundKind lemmas[] = {BoundKind::Shuffle,   BoundKind::PieceMerge,
                              BoundKind::ChargedMerge, BoundKind::PassC,
                              BoundKind::LetterRewrite, BoundKind::Assimilate,
                              BoundKind::ThetaUnique};
  for (std::size_t i = 0; i < kSoundnessWords; ++i) {
    GenProfile p;
    p.mode = static_cast<GenMode>(i % 3);
    p.rng_seed = i;
    const std::size_t n = 4 + 2 * (i % ((kSoundnessMaxLength - 2) / 2));
    const Word w = generate(p, n);
    ++s.words;
    s.max_n = std::max<std::uint64_t>(s.max_n, w.size());
    EngineOptions opts;
    opts.throw_on_violation = false;
    try {
      RecordingSink sink;
      const ReductionReport r = reduce(w, &sink, opts);
      const VerifyReport v = verify_trace(Trace{w, std::move(sink.moves)});
      if (!v.end.empty() || v.cost != r.cost) ++s.replay_failures;
      if (v.cost > total_cost_bound(w.size())) ++s.bound_violations;
      if (w.size() > 0) {
        s.worst_total_ratio = std::max(s.worst_total_ratio, static_cast<double>(v.cost) /
                                                                static_cast<double>(r.bound));
        s.worst_length_ratio =
            std::max(s.worst_length_ratio, static_cast<double>(r.max_boundary_length) /
                                               static_cast<double>(10 * w.size()));
      }
      for (BoundKind k : lemmas) {
        const BoundCounter& c = r.audit.counter(k);
        s.lemma_calls += c.calls;
        s.lemma_unchecked += c.calls - c.checked;
        s.lemma_violations += c.violations;
      }
      s.length_violations += r.length_violations;
    } catch (const std::exception& e) {
      ++s.replay_failures;
      if (s.first_error.empty()) s.first_error = w.str() + ": " + e.what();
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

std::string daf_check(std::uint64_t& violations, std::uint64_t& checked) {
  std::mt19937_64 rng(505);
  std::size_t worst_len = 0;
  double worst = 0;
  for (std::size_t t = 0; t < kDafRandomWords; ++t) {
    const std::size_t len = 2 * (1 + rng() % (kDafRandomMaxLength / 2));
    const Word word = Word::parse(oracle::random_balanced(rng, len));
    const std::int64_t lo = static_cast<std::int64_t>(rng() % 100000);
    const std::size_t out = daf_shape(word, lo).length();
    ++checked;
    if (out > kDafLengthFactor * word.size()) ++violations;
    const double ratio = static_cast<double>(out) / static_cast<double>(word.size());
    if (ratio > worst) {
      worst = ratio;
      worst_len = word.size();
    }
  }
  std::vector<Letter> v;
  for (std::size_t len = 0; len <= kDafExhaustiveLength; len += 2) {
    v.assign(len, Letter{});
    const unsigned patterns = 1u << len;
    const unsigned gens = 1u << (2 * len);
    for (unsigned mask = 0; mask < patterns; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) * 2 != len) continue;
      for (unsigned g = 0; g < gens; ++g) {
        for (std::size_t i = 0; i < len; ++i) {
          v[i] = Letter(static_cast<Generator>((g >> (2 * i)) & 3), (mask >> i) & 1 ? 1 : -1);
        }
        const Word word(v);
        for (std::int64_t lo = 0; lo < 8; ++lo) {
          ++checked;
          if (daf_shape(word, lo).length() > kDafLengthFactor * len) ++violations;
        }
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%llu forms, %llu over 10l(v), worst ratio %.2f at l(v)=%zu",
                static_cast<unsigned long long>(checked),
                static_cast<unsigned long long>(violations), worst, worst_len);
  return buf;
}

// ---------------------------------------------------------------------------

std::size_t brute_cover_count(std::int64_t lo, std::int64_t hi) {
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::size_t> best(n + 1, n + 1);
  best[n] = 0;
  for (std::size_t i = n; i-- > 0;) {
    const std::int64_t start = lo + static_cast<std::int64_t>(i);
    for (std::int64_t size = 1; start % size == 0 && i + static_cast<std::size_t>(size) <= n;
         size *= 2) {
      best[i] = std::min(best[i], 1 + best[i + static_cast<std::size_t>(size)]);
    }
  }
  return best[0];
}

std::string dyadic_check(std::uint64_t& mismatches) {
  std::uint64_t intervals = 0;
  for (std::int64_t lo = 0; lo < kDyadicRange; ++lo) {
    for (std::int64_t hi = lo; hi < kDyadicRange; ++hi) {
      ++intervals;
      const Cover c = mdc(Interval{lo, hi});
      std::int64_t next = lo;
      for (const DyadicInterval& d : c) {
        if (d.lo() != next) ++mismatches;
        next = d.hi() + 1;
      }
      if (next != hi + 1) ++mismatches;
      std::size_t m = 0;
      while (m + 1 < c.size() && c[m].height < c[m + 1].height) ++m;
      for (std::size_t i = m + 1; i + 1 < c.size(); ++i) {
        if (c[i].height <= c[i + 1].height) ++mismatches;
      }
      for (std::size_t k = 0; k < c.size(); ++k) {
        std::int64_t left = 0;
        std::int64_t right = 0;
        for (std::size_t i = 0; i < k; ++i) left += c[i].size();
        for (std::size_t i = k + 1; i < c.size(); ++i) right += c[i].size();
        if (!(left < c[k].size() || right < c[k].size())) ++mismatches;
      }
      if (hi - lo + 1 <= kDyadicBruteMax && c.size() != brute_cover_count(lo, hi)) ++mismatches;
    }
  }
  std::vector<std::int64_t> fig;
  for (const DyadicInterval& d : mdc(Interval{5, 20})) fig.push_back(d.size());
  if (fig != std::vector<std::int64_t>{1, 2, 8, 4, 1}) ++mismatches;
  return std::to_string(intervals) + " intervals, " + std::to_string(mismatches) +
         " mismatches, [5,20] parts 1,2,8,4,1";
}

// ---------------------------------------------------------------------------

std::string paf_check(std::uint64_t& failures_out) {
  std::mt19937_64 rng(707);
  for (std::size_t t = 0; t < kPafCases; ++t) {
    const std::size_t len = 2 * (rng() % (kPafMaxLength / 2 + 1));
    const std::string v = oracle::random_balanced(rng, len);
    const auto parts = oracle::random_partition(rng, len);
    try {
      const Word vw = Word::parse(v);
      const Word out = paf(vw, parts);
      const VerifyReport rep = verify_trace(paf_trace(vw, parts));
      if (!fxf_equal(out, vw) || !is_alternating(out) || rep.end != out ||
          out.str() != oracle::paf(v, parts)) {
        ++failures_out;
      }
    } catch (const std::exception&) {
      ++failures_out;
    }
  }
  return std::to_string(kPafCases) + " cases, " + std::to_string(failures_out) + " failures";
}

// ---------------------------------------------------------------------------

std::string decider_check(std::uint64_t& disagreements) {
  std::mt19937_64 rng(808);
  std::uint64_t identities = 0;
  std::uint64_t internal = 0;
  for (std::size_t i = 0; i < kDeciderWords; ++i) {
    Word w;
    if (i % 2 == 0) {
      GenProfile p;
      p.mode = static_cast<GenMode>((i / 2) % 3);
      p.rng_seed = 9000 + i;
      w = generate(p, 2 * (1 + rng() % (kDeciderMaxLength / 2)));
    } else {
      w = random_word(9000 + i, rng() % (kDeciderMaxLength + 1));
    }
    const bool decided = decide_identity(w);
    identities += decided ? 1 : 0;
    bool reduced = false;
    EngineOptions opts;
    opts.check_identity = false;
    try {
      RecordingSink sink;
      reduce(w, &sink, opts);
      reduced = verify_trace(Trace{w, std::move(sink.moves)}).end.empty();
    } catch (const NotNullHomotopic&) {
      reduced = false;
    } catch (const std::exception&) {
      ++internal;
      reduced = false;
    }
    if (decided != reduced) ++disagreements;
  }
  return std::to_string(kDeciderWords) + " words, " + std::to_string(identities) +
         " identities, " + std::to_string(disagreements) + " disagreements, " +
         std::to_string(internal) + " internal errors";
}

}  // namespace

int main() {
  {
    Timer t;
    const SuiteTotals s = run_suite();
    const double secs = t.seconds();
    std::string d1 = std::to_string(s.words) + " words up to n=" + std::to_string(s.max_n) +
                     ", " + std::to_string(s.replay_failures) + " failures";
    if (!s.first_error.empty()) d1 += ", first: " + s.first_error;
    report(1, "soundness", s.replay_failures <= kAllowedFailures, d1, secs);

    char buf[200];
    std::snprintf(buf, sizeof buf, "%llu violations, worst cost/bound %.2e",
                  static_cast<unsigned long long>(s.bound_violations), s.worst_total_ratio);
    report(2, "global bound", s.bound_violations <= kAllowedFailures && s.replay_failures == 0,
           buf, 0);

    std::snprintf(buf, sizeof buf, "%llu audited calls, %llu unchecked, %llu violations",
                  static_cast<unsigned long long>(s.lemma_calls),
                  static_cast<unsigned long long>(s.lemma_unchecked),
                  static_cast<unsigned long long>(s.lemma_violations));
    report(3, "per-lemma bounds",
           s.lemma_violations <= kAllowedFailures && s.lemma_unchecked == 0 &&
               s.lemma_calls > 0 && s.replay_failures == 0,
           buf, 0);

    std::snprintf(buf, sizeof buf, "%llu violations, worst length/10n %.3f",
                  static_cast<unsigned long long>(s.length_violations), s.worst_length_ratio);
    report(4, "intermediate length", s.length_violations <= kAllowedFailures &&
                                         s.replay_failures == 0,
           buf, 0);
  }
  {
    Timer t;
    std::uint64_t violations = 0;
    std::uint64_t checked = 0;
    const std::string d = daf_check(violations, checked);
    report(5, "daf length", violations <= kAllowedFailures, d, t.seconds());
  }
  {
    Timer t;
    std::uint64_t mismatches = 0;
    const std::string d = dyadic_check(mismatches);
    report(6, "dyadic covers", mismatches <= kAllowedFailures, d, t.seconds());
  }
  {
    Timer t;
    std::uint64_t fails = 0;
    const std::string d = paf_check(fails);
    report(7, "paf", fails <= kAllowedFailures, d, t.seconds());
  }
  {
    Timer t;
    std::uint64_t disagreements = 0;
    const std::string d = decider_check(disagreements);
    report(8, "decider", disagreements <= kAllowedFailures, d, t.seconds());
  }
  {
    Timer t;
    std::vector<std::size_t> lengths;
    for (std::size_t n = kScalingMin; n <= kScalingMax; n *= 2) lengths.push_back(n);
    bool pass = false;
    std::string d;
    try {
      const BenchResult r = bench(lengths, kScalingSeeds);
      pass = r.slope >= kSlopeLow && r.slope <= kSlopeHigh && r.worst_ratio <= kMaxRatio;
      char buf[200];
      std::snprintf(buf, sizeof buf, "%zu runs, slope %.3f, worst cost/bound %.2e",
                    r.rows.size(), r.slope, r.worst_ratio);
      d = buf;
    } catch (const std::exception& e) {
      d = std::string("bench failed: ") + e.what();
    }
    report(9, "scaling", pass, d, t.seconds());
  }
  std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return failures == 0 ? 0 : 1;
}
