#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stallings {

// Closed integer interval [lo, hi]. Empty when hi < lo.
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;

  std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool empty() const { return hi < lo; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// D_{r,j} = [j 2^r, (j+1) 2^r - 1].
struct DyadicInterval {
  int height = 0;
  std::int64_t index = 0;

  std::int64_t lo() const { return index * (std::int64_t{1} << height); }
  std::int64_t hi() const { return lo() + size() - 1; }
  std::int64_t size() const { return std::int64_t{1} << height; }
  Interval span() const { return Interval{lo(), hi()}; }
  DyadicInterval parent() const { return DyadicInterval{height + 1, index >> 1}; }
  // Whether this and the next interval of the same height form a parent.
  bool is_left_child() const { return (index & 1) == 0; }
  std::string str() const;

  // The dyadic interval spanning exactly iv, if any.
  static std::optional<DyadicInterval> from(const Interval& iv);

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
  friend auto operator<=>(const DyadicInterval&, const DyadicInterval&) = default;
};

using Cover = std::vector<DyadicInterval>;

struct MergeStep {
  std::size_t k = 0;  // index of `left` in the cover before the step
  DyadicInterval left;
  DyadicInterval right;

  DyadicInterval merged() const { return left.parent(); }
  friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

// Maximal dyadic intervals inside U, ascending. Throws EmptyInterval.
Cover mdc(const Interval& u);

// Union of an ascending contiguous cover; throws NotDyadicCover otherwise.
Interval cover_span(const Cover& x);

// Steps from x0 to mdc(span(x0)), always merging the leftmost eligible
// sibling pair of minimal length.
std::vector<MergeStep> dyadic_to_mdc(const Cover& x0);

// Steps from mdc(U) + mdc(V) to mdc(U u V). Requires min V = max U + 1.
std::vector<MergeStep> merge_sequence_pair(const Interval& u, const Interval& v);

enum class Side { Left, Right };

// Side::Left: steps from {{min U - 1}} + mdc(U) to mdc({min U - 1} u U),
// each merging the two leftmost parts. Side::Right mirrors this at max U + 1.
std::vector<MergeStep> merge_sequence_point(const Interval& u, Side side);

// Replays steps on x, checking that each one merges the named siblings.
Cover apply_steps(Cover x, const std::vector<MergeStep>& steps);

}  // namespace stallings
