#include "stallings/fxf.hpp"

#include "stallings/errors.hpp"

namespace stallings {

namespace {

void require_s_free(const Word& u) {
  for (Letter l : u) {
    if (l.is_s()) throw ContainsS("word " + u.str() + " contains s");
  }
}

// The moves sorting w: for each ab letter (in order) its original index.
std::vector<std::uint32_t> ab_positions(std::span<const Letter> w) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].in_ab()) out.push_back(static_cast<std::uint32_t>(i));
  }
  return out;
}

std::vector<Letter> sorted_letters(std::span<const Letter> w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w) if (l.in_ab()) out.push_back(l);
  for (Letter l : w) if (!l.in_ab()) out.push_back(l);
  return out;
}

struct Cancel {
  std::uint32_t position;
  Letter left;
};

// Stack reduction of w; returns the cancellations as (position, letter)
// in the word current at the time, and leaves the reduced word in w.
std::vector<Cancel> reduce_with_log(std::vector<Letter>& w) {
  std::vector<Cancel> log;
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter l : w) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      log.push_back(Cancel{static_cast<std::uint32_t>(stack.size() - 1), stack.back()});
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  w = std::move(stack);
  return log;
}

}  // namespace

FxFNormalForm fxf_normal_form(const Word& u) {
  require_s_free(u);
  std::vector<Letter> ab;
  std::vector<Letter> cd;
  for (Letter l : u) (l.in_ab() ? ab : cd).push_back(l);
  return FxFNormalForm{free_reduce(Word(std::move(ab))),
                       free_reduce(Word(std::move(cd)))};
}

bool fxf_equal(const Word& u, const Word& v) {
  return fxf_normal_form(u) == fxf_normal_form(v);
}

std::uint64_t ab_inversions(std::span<const Letter> u) {
  std::uint64_t cd_seen = 0;
  std::uint64_t total = 0;
  for (Letter l : u) {
    if (l.in_ab()) {
      total += cd_seen;
    } else {
      ++cd_seen;
    }
  }
  return total;
}

std::uint64_t shuffle_window(Rewriter& rw, std::size_t pos, std::size_t len,
                             const Word& target) {
  const Word source = rw.slice(pos, len);
  if (!(fxf_normal_form(source) == fxf_normal_form(target))) {
    throw NotEqualInFxF(source.str() + " and " + target.str() +
                        " differ in F(a,b) x F(c,d)");
  }
  const std::uint64_t before = rw.cost();

  // Forward half: bubble each ab letter left to its sorted slot.
  const auto src_ab = ab_positions(source.letters());
  for (std::size_t j = 0; j < src_ab.size(); ++j) {
    for (std::size_t t = src_ab[j]; t > j; --t) rw.swap(pos + t - 1);
  }
  std::vector<Letter> middle = sorted_letters(source.letters());
  for (const Cancel& c : reduce_with_log(middle)) rw.free_reduce(pos + c.position);

  // Backward half: replay target's forward half in reverse.
  std::vector<Letter> target_middle = sorted_letters(target.letters());
  const auto target_log = reduce_with_log(target_middle);
  if (target_middle != middle) throw std::logic_error("shuffle: middle words differ");
  for (auto it = target_log.rbegin(); it != target_log.rend(); ++it) {
    rw.free_expand(pos + it->position, it->left);
  }
  const auto dst_ab = ab_positions(target.letters());
  for (std::size_t j = dst_ab.size(); j-- > 0;) {
    for (std::size_t t = j; t < dst_ab[j]; ++t) rw.swap(pos + t);
  }
  return rw.cost() - before;
}

Trace shuffle(const Word& u, const Word& v) {
  require_s_free(u);
  require_s_free(v);
  return record_trace(u, [&](Rewriter& rw) { shuffle_window(rw, 0, u.size(), v); });
}

}  // namespace stallings
