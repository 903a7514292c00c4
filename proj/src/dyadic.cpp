#include "stallings/dyadic.hpp"

#include <stdexcept>

#include "stallings/errors.hpp"

namespace stallings {

std::string DyadicInterval::str() const {
  return "D(" + std::to_string(height) + "," + std::to_string(index) + ")";
}

std::optional<DyadicInterval> DyadicInterval::from(const Interval& iv) {
  const std::int64_t n = iv.size();
  if (n <= 0 || (n & (n - 1)) != 0) return std::nullopt;
  if ((iv.lo & (n - 1)) != 0) return std::nullopt;
  int r = 0;
  while ((std::int64_t{1} << r) < n) ++r;
  return DyadicInterval{r, iv.lo >> r};
}

Cover mdc(const Interval& u) {
  if (u.empty()) throw EmptyInterval("mdc of an empty interval");
  Cover out;
  std::int64_t cur = u.lo;
  while (cur <= u.hi) {
    int r = 0;
    while (r < 62) {
      const std::int64_t next = std::int64_t{1} << (r + 1);
      if ((cur & (next - 1)) != 0 || cur + next - 1 > u.hi) break;
      ++r;
    }
    out.push_back(DyadicInterval{r, cur >> r});
    cur += std::int64_t{1} << r;
  }
  return out;
}

Interval cover_span(const Cover& x) {
  if (x.empty()) throw NotDyadicCover("empty cover");
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i + 1].lo() != x[i].hi() + 1) {
      throw NotDyadicCover("cover parts " + x[i].str() + " and " +
                           x[i + 1].str() + " are not contiguous");
    }
  }
  return Interval{x.front().lo(), x.back().hi()};
}

namespace {

bool mergeable(const DyadicInterval& l, const DyadicInterval& r) {
  return l.height == r.height && l.is_left_child() && r.index == l.index + 1;
}

void merge_at(Cover& x, std::size_t k) {
  x[k] = x[k].parent();
  x.erase(x.begin() + static_cast<std::ptrdiff_t>(k) + 1);
}

}  // namespace

std::vector<MergeStep> dyadic_to_mdc(const Cover& x0) {
  cover_span(x0);
  Cover x = x0;
  std::vector<MergeStep> steps;
  for (;;) {
    std::size_t best = x.size();
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
      if (mergeable(x[k], x[k + 1]) &&
          (best == x.size() || x[k].height < x[best].height)) {
        best = k;
      }
    }
    if (best == x.size()) break;
    steps.push_back(MergeStep{best, x[best], x[best + 1]});
    merge_at(x, best);
  }
  return steps;
}

std::vector<MergeStep> merge_sequence_pair(const Interval& u, const Interval& v) {
  if (u.empty() || v.empty() || v.lo != u.hi + 1) {
    throw NotAdjacent("intervals are not adjacent");
  }
  Cover x = mdc(u);
  const Cover right = mdc(v);
  x.insert(x.end(), right.begin(), right.end());
  auto steps = dyadic_to_mdc(x);
  for (const MergeStep& st : steps) {
    const Interval m = st.merged().span();
    if (u.contains(m) || v.contains(m)) {
      throw std::logic_error("merge step " + st.merged().str() +
                             " does not straddle the boundary");
    }
  }
  return steps;
}

std::vector<MergeStep> merge_sequence_point(const Interval& u, Side side) {
  if (u.empty()) throw EmptyInterval("merge_sequence_point on an empty interval");
  Cover x = mdc(u);
  std::vector<MergeStep> steps;
  if (side == Side::Left) {
    x.insert(x.begin(), DyadicInterval{0, u.lo - 1});
    while (x.size() >= 2 && mergeable(x[0], x[1])) {
      steps.push_back(MergeStep{0, x[0], x[1]});
      merge_at(x, 0);
    }
  } else {
    x.push_back(DyadicInterval{0, u.hi + 1});
    while (x.size() >= 2 && mergeable(x[x.size() - 2], x.back())) {
      const std::size_t k = x.size() - 2;
      steps.push_back(MergeStep{k, x[k], x[k + 1]});
      merge_at(x, k);
    }
  }
  if (x != mdc(cover_span(x))) {
    throw std::logic_error("point merge did not reach the minimal cover");
  }
  return steps;
}

Cover apply_steps(Cover x, const std::vector<MergeStep>& steps) {
  for (const MergeStep& st : steps) {
    if (st.k + 1 >= x.size() || x[st.k] != st.left || x[st.k + 1] != st.right ||
        !mergeable(st.left, st.right)) {
      throw NotDyadicCover("merge step does not match the cover");
    }
    merge_at(x, st.k);
  }
  return x;
}

}  // namespace stallings
