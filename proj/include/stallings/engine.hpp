#pragma once

#include <cstdint>
#include <utility>

#include "stallings/rewriting.hpp"
#include "stallings/subroutines.hpp"
#include "stallings/words.hpp"

namespace stallings {

// u = 1 in S: every s cancels in a pinch and what remains is trivial in
// F(a,b) x F(c,d).
bool decide_identity(const Word& u);

// Leftmost adjacent pair (i, i+1) that is s^e s^-e, or two letters of
// {a,b,c,d} with opposite exponents. Throws TooShort, NotBalanced.
std::pair<std::size_t, std::size_t> find_xy(const Word& u);

// 17643 n^2 / 2 - 2174 n.
std::uint64_t total_cost_bound(std::uint64_t n);

struct CostBuckets {
  std::uint64_t s_shuffle = 0;
  std::uint64_t assimilate = 0;
  std::uint64_t merges = 0;
  std::uint64_t final_shuffle = 0;
  std::uint64_t total() const { return s_shuffle + assimilate + merges + final_shuffle; }
};

struct BucketBounds {
  std::uint64_t s_shuffle;
  std::uint64_t assimilate;
  std::uint64_t merges;
  std::uint64_t final_shuffle;
};
BucketBounds bucket_bounds(std::uint64_t n);

struct EngineOptions {
  AuditMode audit = AuditMode::Full;
  // Run decide_identity up front and throw NotNullHomotopic early.
  bool check_identity = true;
  // false: record bound violations in the report instead of throwing.
  bool throw_on_violation = true;
};

struct ReductionReport {
  std::size_t n = 0;                    // input length; the bound is in n
  std::size_t reduced_length = 0;       // after the initial free reduction
  std::uint64_t cost = 0;
  std::uint64_t bound = 0;
  std::uint64_t moves = 0;
  std::size_t max_length = 0;           // over every intermediate word
  std::size_t max_boundary_length = 0;  // over words at iteration boundaries
  std::size_t iterations = 0;
  std::size_t length_violations = 0;    // boundaries with length > 10n
  CostBuckets buckets;
  CostAudit audit;
};

// Reduces w to the empty word, emitting every move to sink. Adjacent
// inverse pairs of w are cancelled first at no cost; the main loop then
// runs on the freely reduced word. Throws
// NotNullHomotopic if w is not the identity (detected up front, or during
// the run when check_identity is off).
ReductionReport reduce(const Word& w, MoveSink* sink, const EngineOptions& opts = {});

Trace reduce_to_empty(const Word& w, const EngineOptions& opts = {});

struct AreaReport {
  std::size_t n = 0;
  std::uint64_t cost = 0;
  std::uint64_t bound = 0;
  std::size_t max_intermediate_length = 0;
};

// Reduces w with every move replayed by an independent verifier.
AreaReport area_report(const Word& w);

}  // namespace stallings
