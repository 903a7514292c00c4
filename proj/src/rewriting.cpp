#include "stallings/rewriting.hpp"

#include <stdexcept>

#include "stallings/errors.hpp"

namespace stallings {

namespace {

using namespace letters;

constexpr PairId kNoPair = ~PairId{0};

std::uint64_t pair_key(const Word& lhs, const Word& rhs) {
  std::uint64_t key = (lhs.size() << 3) | rhs.size();
  for (Letter l : lhs) key = (key << 4) | static_cast<std::uint64_t>(l.code());
  for (Letter l : rhs) key = (key << 4) | static_cast<std::uint64_t>(l.code());
  return key;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].is_inverse_of(w[i + 1])) return false;
  }
  return true;
}

Word rotate(const Word& w, std::size_t k) {
  return w.subword(k, w.size() - k) + w.subword(0, k);
}

}  // namespace

const std::vector<Word>& relators() {
  static const std::vector<Word> table = [] {
    const Letter base[4] = {a, b, c, d};
    std::vector<Word> out;
    for (Letter x : {a, b}) {
      for (Letter y : {c, d}) {
        out.push_back(Word{x.inverse(), y.inverse(), x, y});
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const Letter x = base[i];
        const Letter y = base[j];
        out.push_back(Word{x.inverse(), s, x, y.inverse(), S, y});
      }
    }
    return out;
  }();
  return table;
}

const RewriteTable& RewriteTable::instance() {
  static const RewriteTable table;
  return table;
}

RewriteTable::RewriteTable() {
  constexpr std::size_t kMaxSide = 4;
  for (const Word& r : relators()) {
    for (const Word& cyc : {r, r.inverse()}) {
      for (std::size_t rot = 0; rot < cyc.size(); ++rot) {
        const Word conj = rotate(cyc, rot);
        for (std::size_t k = 0; k <= conj.size(); ++k) {
          Word lhs = conj.subword(0, k);
          Word rhs = conj.subword(k, conj.size() - k).inverse();
          if (lhs.size() > kMaxSide || rhs.size() > kMaxSide) continue;
          if (!is_freely_reduced(lhs) || !is_freely_reduced(rhs)) continue;
          const std::uint64_t key = pair_key(lhs, rhs);
          if (index_.contains(key)) continue;
          index_.emplace(key, static_cast<PairId>(pairs_.size()));
          pairs_.push_back(RewritePair{std::move(lhs), std::move(rhs)});
        }
      }
    }
  }
  reverse_.resize(pairs_.size());
  for (PairId id = 0; id < pairs_.size(); ++id) {
    auto rev = find(pairs_[id].rhs, pairs_[id].lhs);
    if (!rev) throw std::logic_error("rewrite table is not symmetric");
    reverse_[id] = *rev;
  }

  for (auto& row : swap_) row.fill(kNoPair);
  for (Letter x : {a, A, b, B}) {
    for (Letter y : {c, C, d, D}) {
      const auto fwd = find(Word{x, y}, Word{y, x});
      const auto bwd = find(Word{y, x}, Word{x, y});
      if (!fwd || !bwd) throw std::logic_error("missing commutation pair");
      swap_[x.code()][y.code()] = *fwd;
      swap_[y.code()][x.code()] = *bwd;
    }
  }
  for (int neg = 0; neg < 2; ++neg) {
    const Letter t = neg ? S : s;
    for (int xg = 0; xg < 4; ++xg) {
      for (int yg = 0; yg < 4; ++yg) {
        convey_[neg][xg][yg] = kNoPair;
        if (xg == yg) continue;
        const Letter x(static_cast<Generator>(xg), 1);
        const Letter yi(static_cast<Generator>(yg), -1);
        const auto id = find(Word{t, x, yi}, Word{x, yi, t});
        if (!id) throw std::logic_error("missing conveyance pair");
        convey_[neg][xg][yg] = *id;
      }
    }
  }
}

std::optional<PairId> RewriteTable::find(const Word& lhs, const Word& rhs) const {
  if (lhs.size() > 4 || rhs.size() > 4) return std::nullopt;
  auto it = index_.find(pair_key(lhs, rhs));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PairId RewriteTable::swap(Letter x, Letter y) const {
  const PairId id = swap_[x.code()][y.code()];
  if (id == kNoPair) {
    throw std::logic_error(std::string("letters do not commute: ") +
                           x.to_char() + y.to_char());
  }
  return id;
}

PairId RewriteTable::convey(Letter t, Letter x, Letter y_inv) const {
  if (!t.is_s() || x.is_s() || y_inv.is_s() || x.exponent() < 0 ||
      y_inv.exponent() > 0) {
    throw std::logic_error("bad conveyance letters");
  }
  const PairId id = convey_[t.exponent() < 0][static_cast<int>(x.generator())]
                           [static_cast<int>(y_inv.generator())];
  if (id == kNoPair) throw std::logic_error("no conveyance for x == y");
  return id;
}

std::vector<RewritePair> rewrite_pairs() { return RewriteTable::instance().pairs(); }

// ---------------------------------------------------------------------------

std::uint64_t Trace::cost() const {
  std::uint64_t n = 0;
  for (const Move& m : moves) n += m.kind == MoveKind::ApplyRelator;
  return n;
}

Trace concatenate(const Trace& x, const Trace& y) {
  Trace out{x.start, x.moves};
  out.moves.insert(out.moves.end(), y.moves.begin(), y.moves.end());
  return out;
}

TraceReplayer::TraceReplayer(const Word& start)
    : word_(start), max_length_(start.size()) {}

void TraceReplayer::apply(const Move& m) {
  const std::size_t pos = m.position;
  const std::size_t n = word_.size();
  switch (m.kind) {
    case MoveKind::FreeReduce:
      if (pos + 1 >= n) throw IllegalMove(index_, pos, "reduction past end");
      if (!word_[pos].is_inverse_of(word_[pos + 1])) {
        throw IllegalMove(index_, pos, "no inverse pair to reduce");
      }
      word_.erase(pos, 2);
      break;
    case MoveKind::FreeExpand:
      if (pos > n) throw IllegalMove(index_, pos, "expansion past end");
      if (m.letter.code() >= kLetterCodes) {
        throw IllegalMove(index_, pos, "bad letter");
      }
      word_.insert_pair(pos, m.letter, m.letter.inverse());
      break;
    case MoveKind::ApplyRelator: {
      const auto& table = RewriteTable::instance();
      if (m.pair >= table.pairs().size()) {
        throw IllegalMove(index_, pos, "unknown rewrite pair");
      }
      const RewritePair& p = table[m.pair];
      if (pos + p.lhs.size() > n) {
        throw IllegalMove(index_, pos, "relator lhs past end");
      }
      for (std::size_t i = 0; i < p.lhs.size(); ++i) {
        if (word_[pos + i] != p.lhs[i]) {
          throw IllegalMove(index_, pos,
                            "relator lhs " + p.lhs.str() + " does not occur");
        }
      }
      word_.replace(pos, p.lhs.size(), p.rhs.letters().data(), p.rhs.size());
      ++cost_;
      break;
    }
  }
  ++index_;
  max_length_ = std::max(max_length_, word_.size());
}

VerifyReport TraceReplayer::report() const {
  return VerifyReport{current(), cost_, max_length_, index_};
}

VerifyReport verify_trace(const Trace& t) {
  TraceReplayer r(t.start);
  for (const Move& m : t.moves) r.apply(m);
  return r.report();
}

Word apply_move(const Word& w, const Move& m) {
  TraceReplayer r(w);
  r.apply(m);
  return r.current();
}

// ---------------------------------------------------------------------------

Rewriter::Rewriter(const Word& start, MoveSink* sink)
    : word_(start), sink_(sink), max_length_(start.size()) {}

void Rewriter::emit(const Move& m) {
  ++moves_;
  max_length_ = std::max(max_length_, word_.size());
  if (sink_) sink_->on_move(m);
}

void Rewriter::free_reduce(std::size_t pos) {
  if (pos + 1 >= word_.size() || !word_[pos].is_inverse_of(word_[pos + 1])) {
    throw std::logic_error("rewriter: no inverse pair at " + std::to_string(pos));
  }
  word_.erase(pos, 2);
  emit(Move::reduce(pos));
}

void Rewriter::free_expand(std::size_t pos, Letter x) {
  if (pos > word_.size()) throw std::logic_error("rewriter: expand past end");
  word_.insert_pair(pos, x, x.inverse());
  emit(Move::expand(pos, x));
}

void Rewriter::apply(std::size_t pos, PairId id) {
  const RewritePair& p = RewriteTable::instance()[id];
  if (pos + p.lhs.size() > word_.size()) {
    throw std::logic_error("rewriter: relator past end");
  }
  for (std::size_t i = 0; i < p.lhs.size(); ++i) {
    if (word_[pos + i] != p.lhs[i]) {
      throw std::logic_error("rewriter: lhs " + p.lhs.str() + " absent at " +
                             std::to_string(pos));
    }
  }
  word_.replace(pos, p.lhs.size(), p.rhs.letters().data(), p.rhs.size());
  ++cost_;
  emit(Move::relator(pos, id));
}

void Rewriter::swap(std::size_t pos) {
  apply(pos, RewriteTable::instance().swap(word_[pos], word_[pos + 1]));
}

void Rewriter::carry_right(std::size_t pos) {
  const Letter x = word_[pos];
  const Letter y = word_[pos + 1];
  if (x == y) return;
  if (x.is_inverse_of(y)) {
    free_reduce(pos);
    free_expand(pos, y);
    return;
  }
  swap(pos);
}

}  // namespace stallings
