#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "stallings/letter_buffer.hpp"
#include "stallings/words.hpp"

namespace stallings {

// ---------------------------------------------------------------------------
// Presentation
// ---------------------------------------------------------------------------

// The ten defining relators: the four commutators [x,y] = x^-1 y^-1 x y for
// x in {a,b}, y in {c,d}, followed by s^x s^-y = x^-1 s x y^-1 s^-1 y for the
// six pairs x < y in {a,b,c,d}.
const std::vector<Word>& relators();

// ---------------------------------------------------------------------------
// Rewrite pairs
// ---------------------------------------------------------------------------

using PairId = std::uint32_t;

struct RewritePair {
  Word lhs;
  Word rhs;
  friend bool operator==(const RewritePair&, const RewritePair&) = default;
};

// All (u, v) with u, v freely reduced, l(u), l(v) <= 4, and some cyclic
// conjugate of u v^-1 in relators^{+-1}. The table is closed under
// (u, v) -> (v, u).
class RewriteTable {
 public:
  static const RewriteTable& instance();

  const std::vector<RewritePair>& pairs() const { return pairs_; }
  const RewritePair& operator[](PairId id) const { return pairs_[id]; }
  std::optional<PairId> find(const Word& lhs, const Word& rhs) const;
  PairId reverse(PairId id) const { return reverse_[id]; }

  // x y -> y x for x in {a,b}^{+-1}, y in {c,d}^{+-1} or vice versa.
  PairId swap(Letter x, Letter y) const;
  // t x y^-1 -> x y^-1 t for t = s^{+-1} and x != y in {a,b,c,d}.
  PairId convey(Letter t, Letter x, Letter y_inv) const;

 private:
  RewriteTable();

  std::vector<RewritePair> pairs_;
  std::vector<PairId> reverse_;
  std::unordered_map<std::uint64_t, PairId> index_;
  std::array<std::array<PairId, kLetterCodes>, kLetterCodes> swap_{};
  // [t == s^-1][x generator][y generator]
  std::array<std::array<std::array<PairId, 4>, 4>, 2> convey_{};
};

std::vector<RewritePair> rewrite_pairs();

// ---------------------------------------------------------------------------
// Moves and traces
// ---------------------------------------------------------------------------

enum class MoveKind : std::uint8_t { FreeReduce, FreeExpand, ApplyRelator };

// One elementary step. Positions are 0-based indices into the word current
// at the time of the move.
struct Move {
  MoveKind kind = MoveKind::FreeReduce;
  Letter letter{};        // FreeExpand: inserts letter, letter^-1
  std::uint32_t pair = 0;  // ApplyRelator: index into RewriteTable
  std::uint32_t position = 0;

  static Move reduce(std::size_t pos) {
    return Move{MoveKind::FreeReduce, Letter{}, 0, static_cast<std::uint32_t>(pos)};
  }
  static Move expand(std::size_t pos, Letter x) {
    return Move{MoveKind::FreeExpand, x, 0, static_cast<std::uint32_t>(pos)};
  }
  static Move relator(std::size_t pos, PairId id) {
    return Move{MoveKind::ApplyRelator, Letter{}, id,
                static_cast<std::uint32_t>(pos)};
  }

  const Word& lhs() const { return RewriteTable::instance()[pair].lhs; }
  const Word& rhs() const { return RewriteTable::instance()[pair].rhs; }

  friend bool operator==(const Move& x, const Move& y) {
    if (x.kind != y.kind || x.position != y.position) return false;
    switch (x.kind) {
      case MoveKind::FreeReduce: return true;
      case MoveKind::FreeExpand: return x.letter == y.letter;
      case MoveKind::ApplyRelator: return x.pair == y.pair;
    }
    return false;
  }
};

struct Trace {
  Word start;
  std::vector<Move> moves;

  // Number of relator applications.
  std::uint64_t cost() const;
};

// Appends b's moves to a; the caller guarantees end(a) == start(b).
Trace concatenate(const Trace& a, const Trace& b);

// Applies one move to w. Throws IllegalMove (with move index 0) when the
// move's precondition fails.
Word apply_move(const Word& w, const Move& m);

struct VerifyReport {
  Word end;
  std::uint64_t cost = 0;
  std::size_t max_length = 0;
  std::size_t moves = 0;
};

// Independent replay of moves against the rewrite table. Fails on the first
// illegal move, leaving the replayer unchanged by that move.
class TraceReplayer {
 public:
  explicit TraceReplayer(const Word& start);

  void apply(const Move& m);

  std::size_t size() const { return word_.size(); }
  Word current() const { return word_.word(); }
  std::uint64_t cost() const { return cost_; }
  std::size_t max_length() const { return max_length_; }
  std::size_t moves() const { return index_; }
  VerifyReport report() const;

 private:
  LetterBuffer word_;
  std::uint64_t cost_ = 0;
  std::size_t max_length_ = 0;
  std::size_t index_ = 0;
};

VerifyReport verify_trace(const Trace& t);

// ---------------------------------------------------------------------------
// Move emission
// ---------------------------------------------------------------------------

class MoveSink {
 public:
  virtual ~MoveSink() = default;
  virtual void on_move(const Move& m) = 0;
};

class RecordingSink final : public MoveSink {
 public:
  void on_move(const Move& m) override { moves.push_back(m); }
  std::vector<Move> moves;
};

// Replays every emitted move through an independent TraceReplayer.
class VerifyingSink final : public MoveSink {
 public:
  explicit VerifyingSink(const Word& start) : replayer_(start) {}
  void on_move(const Move& m) override { replayer_.apply(m); }
  const TraceReplayer& replayer() const { return replayer_; }

 private:
  TraceReplayer replayer_;
};

class TeeSink final : public MoveSink {
 public:
  TeeSink(MoveSink& first, MoveSink& second) : first_(first), second_(second) {}
  void on_move(const Move& m) override {
    first_.on_move(m);
    second_.on_move(m);
  }

 private:
  MoveSink& first_;
  MoveSink& second_;
};

// Owns the current word and emits one move per edit. Every higher-level
// routine rewrites through a Rewriter so that the emitted stream is exactly
// the sequence of edits performed.
class Rewriter {
 public:
  explicit Rewriter(const Word& start, MoveSink* sink = nullptr);

  std::size_t size() const { return word_.size(); }
  Letter at(std::size_t i) const { return word_[i]; }
  Word word() const { return word_.word(); }
  Word slice(std::size_t pos, std::size_t len) const {
    return word_.slice(pos, len);
  }
  std::uint64_t cost() const { return cost_; }
  std::size_t max_length() const { return max_length_; }
  std::uint64_t moves() const { return moves_; }

  void free_reduce(std::size_t pos);
  void free_expand(std::size_t pos, Letter x);
  void apply(std::size_t pos, PairId id);

  // Exchanges the commuting letters at pos, pos+1 (one relator).
  void swap(std::size_t pos);
  // Moves the letter at pos one step right, past the letter at pos+1: a swap
  // for commuting letters, nothing for equal letters, and a free reduction
  // followed by a free expansion for inverse letters.
  void carry_right(std::size_t pos);

 private:
  void emit(const Move& m);

  LetterBuffer word_;
  MoveSink* sink_;
  std::uint64_t cost_ = 0;
  std::uint64_t moves_ = 0;
  std::size_t max_length_ = 0;
};

// Runs body against a fresh Rewriter on start and returns the recorded trace.
template <typename Body>
Trace record_trace(const Word& start, Body&& body) {
  RecordingSink sink;
  Rewriter rw(start, &sink);
  body(rw);
  return Trace{start, std::move(sink.moves)};
}

// ---------------------------------------------------------------------------
// Trace file format
// ---------------------------------------------------------------------------
//
//   line 1:  start word
//   then one move per line:
//     R <pos> <lhs> <rhs>     ('-' encodes the empty word)
//     F <pos>
//     E <pos> <letter>

std::string format_move(const Move& m);
Move parse_move(std::string_view line, std::size_t line_number = 0);
void write_trace(std::ostream& os, const Trace& t);
Trace read_trace(std::istream& is);
// Streams the file through a TraceReplayer without materializing the moves.
VerifyReport verify_trace_stream(std::istream& is);

class StreamSink final : public MoveSink {
 public:
  StreamSink(std::ostream& os, const Word& start);
  void on_move(const Move& m) override;

 private:
  std::ostream& os_;
};

}  // namespace stallings
