#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>

#include "stallings/altform.hpp"
#include "stallings/dyadic.hpp"
#include "stallings/rewriting.hpp"

namespace stallings {

// ---------------------------------------------------------------------------
// Cost audit
// ---------------------------------------------------------------------------

enum class BoundKind : std::uint8_t {
  Shuffle,        // l(u)^2 + l(v)^2
  PieceMerge,     // 136 (l(v_i v_i+1) + |prefix exponent sum|)^2
  ChargedMerge,   // 2176 l(theta)^2, piece merges inside block merges
  PassC,          // 2k + l(tau)
  LetterRewrite,  // 2, the closed forms for x and y
  Assimilate,     // 3 l(tau) + 4
  ThetaUnique,    // bound 0: repeats of a charged dyadic interval
  SConvey,        // l(tau)/2, carrying s through a block
  BoundaryLength, // 10n, words between iterations of the main loop
  SBucket,        // 5n^2/2
  AssimilateBucket,  // 15n^2 + 2n
  MergeBucket,    // 2176 n (4n - 1)
  FinalBucket,    // 100 n^2
  Total,          // 17643 n^2 / 2 - 2174 n
  Count
};

const char* bound_name(BoundKind kind);

enum class AuditMode { Full, Sampled, Off };

struct BoundCounter {
  std::uint64_t calls = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double worst_ratio = 0.0;  // max cost / bound over checked calls
};

// Per-lemma cost assertions. Full checks every call and also compares end
// words with independently rebuilt targets; Sampled checks one call in 64
// per bound; Off only counts calls.
class CostAudit {
 public:
  static constexpr std::uint64_t kSamplePeriod = 64;

  explicit CostAudit(AuditMode mode = AuditMode::Full, bool throw_on_violation = true)
      : mode_(mode), throw_(throw_on_violation) {}

  AuditMode mode() const { return mode_; }
  bool structural() const { return mode_ == AuditMode::Full; }

  void check(BoundKind kind, std::uint64_t cost, std::uint64_t bound);

  const BoundCounter& counter(BoundKind kind) const {
    return counters_[static_cast<std::size_t>(kind)];
  }
  std::uint64_t violations() const;

 private:
  AuditMode mode_;
  bool throw_;
  std::array<BoundCounter, static_cast<std::size_t>(BoundKind::Count)> counters_{};
};

// Dyadic intervals already charged as the left part of a piece merge.
class ThetaLedger {
 public:
  // False if d was charged before.
  bool charge(const DyadicInterval& d) { return seen_.insert(d).second; }
  std::size_t size() const { return seen_.size(); }

 private:
  std::set<DyadicInterval> seen_;
};

// ---------------------------------------------------------------------------
// In-place forms. Each rewrites a block whose flattened shape starts at pos
// in rw and returns the block's new shape.
// ---------------------------------------------------------------------------

// Merges pieces i and i+1 by shuffling the window that spans them.
AltShape merge_pieces_at(Rewriter& rw, std::size_t pos, const AltShape& shape,
                         std::size_t i, CostAudit& audit);

// tau_u tau_v -> dyadic form over U u V. u_positions / v_positions are the
// w-hat intervals of the two blocks (either may be empty).
AltShape merge_blocks_at(Rewriter& rw, std::size_t pos, const AltShape& u,
                         const Interval& u_positions, const AltShape& v,
                         const Interval& v_positions, CostAudit& audit,
                         ThetaLedger* ledger = nullptr);

// c^eps tau c^-eps -> tau with every alpha, beta shifted by eps. pos is the
// position of the leading c^eps.
AltShape pass_c_at(Rewriter& rw, std::size_t pos, const AltShape& tau, int eps,
                   CostAudit& audit);

// x tau y -> partitioned form with respect to x, v_1 .. v_k, y. pos is the
// position of x.
AltShape assimilate_xy_at(Rewriter& rw, std::size_t pos, Letter x,
                          const AltShape& tau, Letter y, CostAudit& audit);

// Partitioned form of x v y from assimilate_xy_at -> dyadic form over
// {x_pos} u V u {y_pos}.
AltShape assimilate_dyadic_at(Rewriter& rw, std::size_t pos,
                              const AltShape& bar_tau, const Interval& v_positions,
                              std::int64_t x_pos, std::int64_t y_pos,
                              CostAudit& audit, ThetaLedger* ledger = nullptr);

// ---------------------------------------------------------------------------
// Trace-returning forms, each starting from the flattened input.
// ---------------------------------------------------------------------------

struct SubroutineResult {
  Trace trace;
  AltShape shape;  // shape of the end word
};

SubroutineResult merge_pieces_trace(const AltShape& shape, std::size_t i,
                                    CostAudit* audit = nullptr);

// u = host[u_begin, u_end), v = host[u_end, v_end), both balanced.
struct MergeContext {
  Word host;
  std::size_t u_begin = 0;
  std::size_t u_end = 0;
  std::size_t v_begin = 0;
  std::size_t v_end = 0;
};
SubroutineResult merge_dafs(const MergeContext& ctx, CostAudit* audit = nullptr,
                            ThetaLedger* ledger = nullptr);

// The start word is c^eps tau c^-eps with tau's omitted last beta read as 0.
SubroutineResult pass_c_trace(const AltShape& tau, int eps, CostAudit* audit = nullptr);

SubroutineResult assimilate_xy(Letter x, const AltShape& tau, Letter y,
                               CostAudit* audit = nullptr);

SubroutineResult assimilate_dyadic(const AltShape& bar_tau, const Interval& v_positions,
                                   std::int64_t x_pos, std::int64_t y_pos,
                                   CostAudit* audit = nullptr,
                                   ThetaLedger* ledger = nullptr);

// The word each closed-form rewrite of a flanking letter produces.
Word left_letter_form(Letter x);
Word right_letter_form(Letter y);

// Prefix-sum relations between consecutive pieces hold and an omitted last
// beta is 0.
bool shape_consistent(const AltShape& shape);

}  // namespace stallings
