#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "stallings/generate.hpp"

namespace stallings {

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::uint64_t cost = 0;
  std::uint64_t bound = 0;
  std::size_t max_len = 0;
  double wall_time_ms = 0.0;
};

struct BenchOptions {
  GenMode mode = GenMode::NestedPinches;
  unsigned jobs = 0;  // 0: hardware concurrency
};

struct BenchResult {
  std::vector<BenchRow> rows;  // ordered by (n, seed)
  double slope = 0.0;          // log(mean cost) against log(n)
  double worst_ratio = 0.0;    // max cost / bound
};

// Every cell is generated, reduced under a replaying verifier with sampled
// cost assertions, and checked to end at the empty word. Seeds are
// 0 .. seeds_per_length - 1. Throws BadLength for an empty or odd length.
BenchResult bench(const std::vector<std::size_t>& lengths, std::size_t seeds_per_length,
                  const BenchOptions& opts = {});

// Least-squares slope of log(y) against log(x) over the points with y > 0.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace stallings
