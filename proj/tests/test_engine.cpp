#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "stallings/engine.hpp"
#include "stallings/errors.hpp"
#include "stallings/fxf.hpp"
#include "stallings/generate.hpp"

using namespace stallings;

namespace {

Word W(const char* s) { return Word::parse(s); }

bool reduces(const Word& w) {
  try {
    const Trace t = reduce_to_empty(w);
    return verify_trace(t).end.empty();
  } catch (const NotNullHomotopic&) {
    return false;
  }
}

Word random_word_over(std::mt19937_64& rng, std::size_t n) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Letter::from_code(static_cast<int>(rng() % 10)));
  return Word(std::move(out));
}

}  // namespace

TEST_CASE("decide_identity examples") {
  CHECK(decide_identity(W("ACac")));
  CHECK(decide_identity(W("SbAsaB")));
  CHECK_FALSE(decide_identity(W("AsaS")));
  CHECK(decide_identity(Word{}));
  CHECK_FALSE(decide_identity(W("ab")));
}

TEST_CASE("find_xy examples") {
  using P = std::pair<std::size_t, std::size_t>;
  CHECK(find_xy(W("sS")) == P{0, 1});
  CHECK(find_xy(W("aBsS")) == P{0, 1});
  CHECK(find_xy(W("asSA")) == P{1, 2});
  CHECK_THROWS_AS(find_xy(W("a")), TooShort);
  CHECK_THROWS_AS(find_xy(W("ab")), NotBalanced);
}

TEST_CASE("find_xy picks the leftmost valid pair on balanced words") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 3000; ++t) {
    std::string v = oracle::random_balanced(rng, 2 + 2 * (rng() % 10));
    if (rng() % 2) v = "s" + v + "S";
    const Word u = W(v.c_str());
    const auto [i, j] = find_xy(u);
    CHECK(j == i + 1);
    for (std::size_t k = 0; k + 1 < u.size(); ++k) {
      const bool valid = u[k].is_s() == u[k + 1].is_s() && u[k].exponent() != u[k + 1].exponent();
      if (k < i) CHECK_FALSE(valid);
      if (k == i) CHECK(valid);
    }
  }
}

TEST_CASE("reduce_to_empty examples") {
  const Trace t0 = reduce_to_empty(Word{});
  CHECK(t0.moves.empty());

  const Trace t1 = reduce_to_empty(W("aA"));
  const VerifyReport r1 = verify_trace(t1);
  CHECK(r1.end.empty());
  CHECK(r1.cost == 0);
  for (const Move& m : t1.moves) CHECK(m.kind != MoveKind::ApplyRelator);

  const VerifyReport r2 = verify_trace(reduce_to_empty(W("ACac")));
  CHECK(r2.end.empty());
  CHECK(r2.cost <= 17643 * 16 / 2 - 2174 * 4);
  CHECK(r2.cost >= 1);

  CHECK_THROWS_AS(reduce_to_empty(W("ab")), NotNullHomotopic);
  CHECK_THROWS_AS(reduce_to_empty(W("a")), NotNullHomotopic);
}

TEST_CASE("area_report examples") {
  const AreaReport e = area_report(Word{});
  CHECK(e.n == 0);
  CHECK(e.cost == 0);
  const AreaReport c = area_report(W("BDbd"));
  CHECK(c.cost >= 1);
  CHECK(c.bound == total_cost_bound(4));
  GenProfile p;
  p.mode = GenMode::NestedPinches;
  p.rng_seed = 7;
  const Word w = generate(p, 64);
  const AreaReport g = area_report(w);
  CHECK(g.cost <= 17643 * 64 * 64 / 2 - 2174 * 64);
  CHECK(g.max_intermediate_length >= w.size());
}

TEST_CASE("reduction is sound, bounded and decomposes into its buckets") {
  for (int mode = 0; mode < 3; ++mode) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      GenProfile p;
      p.mode = static_cast<GenMode>(mode);
      p.rng_seed = seed;
      const Word w = generate(p, 2 * (1 + seed % 48));
      VerifyingSink verifier(w);
      const ReductionReport r = reduce(w, &verifier);
      const VerifyReport v = verifier.replayer().report();
      const std::uint64_t n = w.size();
      CHECK(v.end.empty());
      CHECK(v.cost == r.cost);
      CHECK(r.cost <= total_cost_bound(n));
      CHECK(r.reduced_length == n);
      CHECK(r.iterations == n / 2);
      CHECK(r.max_boundary_length <= 10 * n);
      CHECK(r.length_violations == 0);
      CHECK(r.buckets.total() == r.cost);
      const BucketBounds bb = bucket_bounds(n);
      CHECK(r.buckets.s_shuffle <= bb.s_shuffle);
      CHECK(r.buckets.assimilate <= bb.assimilate);
      CHECK(r.buckets.merges <= bb.merges);
      CHECK(r.buckets.final_shuffle <= bb.final_shuffle);
      CHECK(r.audit.violations() == 0);
    }
  }
}

TEST_CASE("unreduced input is cancelled for free first") {
  const Word w = W("abBcCAACac");
  VerifyingSink verifier(w);
  const ReductionReport r = reduce(w, &verifier);
  CHECK(r.n == 10);
  CHECK(r.reduced_length == 4);
  CHECK(r.iterations == 2);
  CHECK(r.bound == total_cost_bound(10));
  CHECK(verifier.replayer().report().end.empty());
}

TEST_CASE("reduction is deterministic") {
  GenProfile p;
  p.mode = GenMode::CommutatorHeavy;
  p.rng_seed = 3;
  const Word w = generate(p, 80);
  const Trace a = reduce_to_empty(w);
  const Trace b = reduce_to_empty(w);
  CHECK(a.moves == b.moves);
}

TEST_CASE("decider agrees with reduction on short random words") {
  std::mt19937_64 rng(62);
  std::size_t identities = 0;
  for (int t = 0; t < 4000; ++t) {
    const Word w = free_reduce(random_word_over(rng, 2 * (rng() % 7)));
    const bool id = decide_identity(w);
    identities += id ? 1 : 0;
    CHECK(id == reduces(w));
  }
  CHECK(identities > 0);
}

TEST_CASE("without the up-front check a non-identity still fails cleanly") {
  EngineOptions opts;
  opts.check_identity = false;
  for (const char* s : {"ab", "AsaS", "acAC", "sasASA", "sS" "ab" "AB" "cd"}) {
    const Word w = W(s);
    if (decide_identity(w)) continue;
    RecordingSink sink;
    CHECK_THROWS_AS(reduce(w, &sink, opts), NotNullHomotopic);
  }
}

TEST_CASE("total bound closed form") {
  CHECK(total_cost_bound(4) == 132448);
  CHECK(total_cost_bound(64) == 17643ull * 64 * 64 / 2 - 2174ull * 64);
  const BucketBounds bb = bucket_bounds(10);
  CHECK(bb.s_shuffle + bb.assimilate + bb.merges + bb.final_shuffle == total_cost_bound(10));
}
