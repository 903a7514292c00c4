#include "stallings/engine.hpp"

#include "stallings/altform.hpp"
#include "stallings/errors.hpp"
#include "stallings/fxf.hpp"

namespace stallings {

bool decide_identity(const Word& u) {
  if (!pinches_away(u.letters())) return false;
  const FxFNormalForm nf = fxf_normal_form(strip_s(u));
  return nf.ab_part.empty() && nf.cd_part.empty();
}

namespace {

bool reducible_pair(Letter x, Letter y) {
  return x.is_s() == y.is_s() && x.exponent() != y.exponent();
}

}  // namespace

std::pair<std::size_t, std::size_t> find_xy(const Word& u) {
  if (u.size() < 2) throw TooShort("find_xy needs at least two letters");
  if (!is_balanced(u)) throw NotBalanced(u.str() + " is not balanced");
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    if (reducible_pair(u[i], u[i + 1])) return {i, i + 1};
  }
  throw std::logic_error("balanced word without a reducible pair: " + u.str());
}

std::uint64_t total_cost_bound(std::uint64_t n) {
  return 17643 * n * n / 2 - 2174 * n;
}

BucketBounds bucket_bounds(std::uint64_t n) {
  return BucketBounds{5 * n * n / 2, 15 * n * n + 2 * n,
                      n == 0 ? 0 : 2176 * n * (4 * n - 1), 100 * n * n};
}

namespace {

struct Item {
  bool block = false;
  std::size_t w_begin = 0;
  std::size_t w_end = 0;
  Letter letter{};          // raw letters
  std::int64_t hat = 0;     // raw letters: non-s letters of w before this one
  Interval hats;            // blocks: positions in w-hat
  AltShape shape;           // blocks
  std::size_t length = 1;   // letters occupied in the current word
};

Interval join(const Interval& l, const Interval& r) {
  if (l.empty()) return r.empty() ? l : r;
  if (r.empty()) return l;
  return Interval{l.lo, r.hi};
}

class Engine {
 public:
  Engine(const Word& w, MoveSink* sink, const EngineOptions& opts, ReductionReport& out)
      : input_(w), rw_(w, sink), opts_(opts), out_(out) {}

  void run() {
    out_.n = input_.size();
    out_.bound = total_cost_bound(input_.size());
    if (input_.size() % 2 != 0) {
      throw NotNullHomotopic("odd length " + std::to_string(input_.size()));
    }
    if (opts_.check_identity && !decide_identity(input_)) {
      throw NotNullHomotopic(input_.str() + " does not represent 1");
    }
    free_reduce_input();
    w_ = rw_.word();
    w_hat_ = strip_s(w_);
    const std::size_t n = w_.size();
    out_.reduced_length = n;
    std::int64_t hat = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Item it;
      it.w_begin = i;
      it.w_end = i + 1;
      it.letter = w_[i];
      it.hat = hat;
      if (!w_[i].is_s()) ++hat;
      items_.push_back(std::move(it));
    }
    out_.max_boundary_length = n;
    const std::size_t bound_n = out_.n;

    for (std::size_t iter = 0; iter < n / 2; ++iter) {
      step();
      ++out_.iterations;
      const std::size_t len = rw_.size();
      out_.max_boundary_length = std::max(out_.max_boundary_length, len);
      if (len > 10 * bound_n) ++out_.length_violations;
      out_.audit.check(BoundKind::BoundaryLength, len, 10 * bound_n);
    }
    finish();
  }

 private:
  // Cost-free cancellation of adjacent inverse pairs before the main loop.
  void free_reduce_input() {
    std::size_t i = 0;
    while (i + 1 < rw_.size()) {
      if (rw_.at(i).is_inverse_of(rw_.at(i + 1))) {
        rw_.free_reduce(i);
        if (i > 0) --i;
      } else {
        ++i;
      }
    }
  }

  std::size_t position_of(std::size_t index) const {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < index; ++i) pos += items_[i].length;
    return pos;
  }

  std::pair<std::size_t, std::size_t> next_pair() const {
    std::size_t prev = items_.size();
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (items_[i].block) continue;
      if (prev != items_.size() && reducible_pair(items_[prev].letter, items_[i].letter)) {
        return {prev, i};
      }
      prev = i;
    }
    throw NotNullHomotopic("no reducible pair left; input is not the identity");
  }

  void step() {
    const auto [ix, iy] = next_pair();
    if (iy - ix > 2 || (iy - ix == 2 && !items_[ix + 1].block)) {
      throw std::logic_error("engine: letters of a pair are not separated by one block");
    }
    const bool has_block = iy == ix + 2;
    const Item& xi = items_[ix];
    const Item& yi = items_[iy];
    std::size_t pos = position_of(ix);

    Item merged;
    merged.block = true;
    merged.w_begin = xi.w_begin;
    merged.w_end = yi.w_end;
    const AltShape tau = has_block ? items_[ix + 1].shape : AltShape{};
    const std::size_t tau_len = has_block ? items_[ix + 1].length : 0;
    const Interval v_hats = has_block ? items_[ix + 1].hats
                                      : Interval{xi.hat + (xi.letter.is_s() ? 0 : 1),
                                                 xi.hat + (xi.letter.is_s() ? 0 : 1) - 1};

    if (xi.letter.is_s()) {
      convey_s(pos, xi.letter, tau_len);
      merged.shape = tau;
      merged.hats = v_hats;
      merged.length = tau_len;
    } else {
      std::uint64_t before = rw_.cost();
      const AltShape bar = assimilate_xy_at(rw_, pos, xi.letter, tau, yi.letter, out_.audit);
      out_.buckets.assimilate += rw_.cost() - before;
      before = rw_.cost();
      merged.shape = assimilate_dyadic_at(rw_, pos, bar, v_hats, xi.hat, yi.hat,
                                          out_.audit, &ledger_);
      out_.buckets.merges += rw_.cost() - before;
      merged.hats = Interval{xi.hat, yi.hat};
      merged.length = merged.shape.length();
    }

    items_.erase(items_.begin() + static_cast<std::ptrdiff_t>(ix) + 1,
                 items_.begin() + static_cast<std::ptrdiff_t>(iy) + 1);
    items_[ix] = std::move(merged);

    std::size_t m = ix;
    if (m > 0 && items_[m - 1].block) {
      pos -= items_[m - 1].length;
      merge_adjacent(m - 1, pos);
      --m;
    }
    if (m + 1 < items_.size() && items_[m + 1].block) merge_adjacent(m, pos);
    if (opts_.audit == AuditMode::Full) check_block(items_[m], pos);
  }

  // Carries s^e at pos through the block of length len and cancels it.
  void convey_s(std::size_t pos, Letter t, std::size_t len) {
    const RewriteTable& table = RewriteTable::instance();
    const std::uint64_t before = rw_.cost();
    std::size_t q = pos;
    for (std::size_t k = 0; k < len / 2; ++k, q += 2) {
      const Letter x = rw_.at(q + 1);
      const Letter y_inv = rw_.at(q + 2);
      if (x.generator() == y_inv.generator()) {
        rw_.free_reduce(q + 1);
        rw_.free_expand(q, x);
      } else {
        rw_.apply(q, table.convey(t, x, y_inv));
      }
    }
    rw_.free_reduce(q);
    const std::uint64_t cost = rw_.cost() - before;
    out_.buckets.s_shuffle += cost;
    out_.audit.check(BoundKind::SConvey, cost, len / 2);
  }

  // Merges the blocks at index i and i + 1; the left one starts at pos.
  void merge_adjacent(std::size_t i, std::size_t pos) {
    Item& l = items_[i];
    Item& r = items_[i + 1];
    const std::uint64_t before = rw_.cost();
    l.shape = merge_blocks_at(rw_, pos, l.shape, l.hats, r.shape, r.hats, out_.audit,
                              &ledger_);
    out_.buckets.merges += rw_.cost() - before;
    l.hats = join(l.hats, r.hats);
    l.w_end = r.w_end;
    l.length = l.shape.length();
    items_.erase(items_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }

  // The block is balanced and sits in the word as its dyadic form.
  void check_block(const Item& b, std::size_t pos) const {
    if (!is_balanced(w_.subword(b.w_begin, b.w_end - b.w_begin))) {
      throw std::logic_error("engine: absorbed subword is not balanced");
    }
    const AltShape expected =
        b.hats.empty() ? AltShape{}
                       : daf_shape(w_hat_.subword(static_cast<std::size_t>(b.hats.lo),
                                                  static_cast<std::size_t>(b.hats.size())),
                                   b.hats.lo);
    if (!(expected == b.shape) || b.length != expected.length() ||
        rw_.slice(pos, b.length) != expected.flatten()) {
      throw std::logic_error("engine: block differs from its dyadic alternating form");
    }
  }

  void finish() {
    for (const Item& it : items_) {
      if (!it.block) throw std::logic_error("engine: raw letters left after the loop");
    }
    const std::size_t len = rw_.size();
    const std::uint64_t before = rw_.cost();
    try {
      shuffle_window(rw_, 0, len, Word{});
    } catch (const NotEqualInFxF&) {
      throw NotNullHomotopic("final word is not trivial in F(a,b) x F(c,d)");
    }
    const std::uint64_t cost = rw_.cost() - before;
    out_.buckets.final_shuffle = cost;
    out_.audit.check(BoundKind::Shuffle, cost, shuffle_bound(len, 0));

    const std::uint64_t n = out_.n;
    const BucketBounds bb = bucket_bounds(n);
    out_.audit.check(BoundKind::SBucket, out_.buckets.s_shuffle, bb.s_shuffle);
    out_.audit.check(BoundKind::AssimilateBucket, out_.buckets.assimilate, bb.assimilate);
    out_.audit.check(BoundKind::MergeBucket, out_.buckets.merges, bb.merges);
    out_.audit.check(BoundKind::FinalBucket, out_.buckets.final_shuffle, bb.final_shuffle);
    out_.cost = rw_.cost();
    out_.audit.check(BoundKind::Total, out_.cost, out_.bound);
    if (out_.cost != out_.buckets.total()) {
      throw std::logic_error("engine: cost buckets do not add up");
    }
    out_.moves = rw_.moves();
    out_.max_length = rw_.max_length();
  }

  const Word& input_;
  Word w_;
  Word w_hat_;
  Rewriter rw_;
  const EngineOptions& opts_;
  ReductionReport& out_;
  std::vector<Item> items_;
  ThetaLedger ledger_;
};

}  // namespace

ReductionReport reduce(const Word& w, MoveSink* sink, const EngineOptions& opts) {
  ReductionReport report;
  report.audit = CostAudit(opts.audit, opts.throw_on_violation);
  Engine(w, sink, opts, report).run();
  return report;
}

Trace reduce_to_empty(const Word& w, const EngineOptions& opts) {
  RecordingSink sink;
  reduce(w, &sink, opts);
  return Trace{w, std::move(sink.moves)};
}

AreaReport area_report(const Word& w) {
  VerifyingSink verifier(w);
  const ReductionReport r = reduce(w, &verifier);
  const VerifyReport v = verifier.replayer().report();
  if (!v.end.empty() || v.cost != r.cost) {
    throw std::logic_error("area_report: verifier disagrees with the engine");
  }
  return AreaReport{r.n, v.cost, r.bound, v.max_length};
}

}  // namespace stallings
