#include "stallings/subroutines.hpp"

#include <algorithm>

#include "stallings/errors.hpp"
#include "stallings/fxf.hpp"

namespace stallings {

using namespace letters;

namespace {

std::uint64_t abs_u(std::int64_t k) { return static_cast<std::uint64_t>(k < 0 ? -k : k); }

std::uint64_t sq(std::uint64_t x) { return x * x; }

void expect_window(const Rewriter& rw, std::size_t pos, const Word& expected,
                   const char* where) {
  if (rw.slice(pos, expected.size()) != expected) {
    throw std::logic_error(std::string(where) + ": end word differs from target " +
                           expected.str());
  }
}

}  // namespace

// ---------------------------------------------------------------------------

const char* bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Shuffle: return "shuffle";
    case BoundKind::PieceMerge: return "piece-merge";
    case BoundKind::ChargedMerge: return "charged-merge";
    case BoundKind::PassC: return "pass-c";
    case BoundKind::LetterRewrite: return "letter-rewrite";
    case BoundKind::Assimilate: return "assimilate";
    case BoundKind::ThetaUnique: return "theta-unique";
    case BoundKind::SConvey: return "s-convey";
    case BoundKind::BoundaryLength: return "boundary-length";
    case BoundKind::SBucket: return "s-bucket";
    case BoundKind::AssimilateBucket: return "assimilate-bucket";
    case BoundKind::MergeBucket: return "merge-bucket";
    case BoundKind::FinalBucket: return "final-bucket";
    case BoundKind::Total: return "total";
    case BoundKind::Count: break;
  }
  return "?";
}

void CostAudit::check(BoundKind kind, std::uint64_t cost, std::uint64_t bound) {
  BoundCounter& ctr = counters_[static_cast<std::size_t>(kind)];
  const std::uint64_t call = ctr.calls++;
  if (mode_ == AuditMode::Off) return;
  if (mode_ == AuditMode::Sampled && call % kSamplePeriod != 0) return;
  ++ctr.checked;
  if (bound > 0) {
    ctr.worst_ratio = std::max(ctr.worst_ratio, static_cast<double>(cost) /
                                                    static_cast<double>(bound));
  } else if (cost > 0) {
    ctr.worst_ratio = std::max(ctr.worst_ratio, static_cast<double>(cost));
  }
  if (cost > bound) {
    ++ctr.violations;
    if (throw_) {
      throw BoundViolation(std::string(bound_name(kind)) + ": cost " +
                           std::to_string(cost) + " exceeds bound " +
                           std::to_string(bound));
    }
  }
}

std::uint64_t CostAudit::violations() const {
  std::uint64_t n = 0;
  for (const BoundCounter& c : counters_) n += c.violations;
  return n;
}

// ---------------------------------------------------------------------------

bool shape_consistent(const AltShape& shape) {
  std::int64_t prefix = 0;
  for (const AltPiece& p : shape.pieces) {
    std::int64_t lambda = 0;
    for (Letter l : p.rho) {
      if (l.generator() == Generator::c) lambda -= l.exponent();
    }
    std::int64_t mu = 0;
    for (Letter l : p.sigma) {
      if (l.generator() == Generator::a) mu -= l.exponent();
    }
    if (p.alpha != prefix + lambda || p.beta != p.alpha + mu) return false;
    prefix = p.beta;
  }
  return !(shape.last_beta_omitted && !shape.empty() && shape.pieces.back().beta != 0);
}

AltShape merge_pieces_at(Rewriter& rw, std::size_t pos, const AltShape& shape,
                         std::size_t i, CostAudit& audit) {
  if (i + 1 >= shape.size()) {
    throw IndexOutOfRange("piece merge at " + std::to_string(i) + " of " +
                          std::to_string(shape.size()) + " pieces");
  }
  AltShape merged = merge_pieces(shape, i);
  const std::size_t start = pos + shape.offset(i);
  const std::size_t len = shape.piece_length(i) + shape.piece_length(i + 1);
  const Word target = merged.flatten_piece(i);
  const std::uint64_t cost = shuffle_window(rw, start, len, target);

  audit.check(BoundKind::Shuffle, cost, shuffle_bound(len, target.size()));
  const std::uint64_t content =
      shape.pieces[i].content_length() + shape.pieces[i + 1].content_length();
  const std::uint64_t prefix = i == 0 ? 0 : abs_u(shape.pieces[i - 1].beta);
  audit.check(BoundKind::PieceMerge, cost, 136 * sq(content + prefix));
  if (audit.structural()) expect_window(rw, start, target, "piece merge");
  return merged;
}

AltShape merge_blocks_at(Rewriter& rw, std::size_t pos, const AltShape& u,
                         const Interval& u_positions, const AltShape& v,
                         const Interval& v_positions, CostAudit& audit,
                         ThetaLedger* ledger) {
  if (u_positions.size() != static_cast<std::int64_t>(u.content_length()) ||
      v_positions.size() != static_cast<std::int64_t>(v.content_length())) {
    throw ShapeMismatch("block shapes do not match their positions");
  }
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (v_positions.lo != u_positions.hi + 1) {
    throw NotAdjacent("blocks are not adjacent in w-hat");
  }
  if (u.pieces.back().beta != 0) throw NotBalanced("left block is not balanced");

  AltShape shape;
  shape.pieces = u.pieces;
  shape.pieces.insert(shape.pieces.end(), v.pieces.begin(), v.pieces.end());
  shape.last_beta_omitted = v.last_beta_omitted;

  for (const MergeStep& st : merge_sequence_pair(u_positions, v_positions)) {
    if (shape.pieces[st.k].content_length() != static_cast<std::size_t>(st.left.size()) ||
        shape.pieces[st.k + 1].content_length() != static_cast<std::size_t>(st.right.size())) {
      throw ShapeMismatch("piece lengths disagree with the merge step");
    }
    const std::uint64_t before = rw.cost();
    shape = merge_pieces_at(rw, pos, shape, st.k, audit);
    const std::uint64_t theta = static_cast<std::uint64_t>(st.left.size());
    audit.check(BoundKind::ChargedMerge, rw.cost() - before, 2176 * sq(theta));
    if (!u_positions.contains(st.left.span()) && !v_positions.contains(st.right.span())) {
      throw std::logic_error("merge step " + st.merged().str() +
                             " has neither side inside its block");
    }
    if (ledger) audit.check(BoundKind::ThetaUnique, ledger->charge(st.left) ? 0 : 1, 0);
  }
  return shape;
}

AltShape pass_c_at(Rewriter& rw, std::size_t pos, const AltShape& tau, int eps,
                   CostAudit& audit) {
  if (eps != 1 && eps != -1) throw ShapeMismatch("eps must be +1 or -1");
  if (tau.last_beta_omitted && !tau.empty() && tau.pieces.back().beta != 0) {
    throw ShapeMismatch("omitted final beta is not 0");
  }
  const Letter carry_c = eps > 0 ? c : C;
  const std::size_t tau_len = tau.length();
  if (pos + tau_len + 2 > rw.size() || rw.at(pos) != carry_c ||
      rw.at(pos + 1 + tau_len) != carry_c.inverse()) {
    throw ShapeMismatch("word is not c^eps tau c^-eps at the given position");
  }
  const std::uint64_t before = rw.cost();
  std::size_t q = pos;
  auto carry = [&](std::size_t letters) {
    for (std::size_t n = 0; n < letters; ++n, ++q) rw.carry_right(q);
  };
  // Re-expresses the carried letter x at q as (x y^-1)^eps y^eps.
  auto convert = [&](Letter y) {
    if (eps > 0) {
      rw.free_expand(q + 1, y.inverse());
    } else {
      rw.free_expand(q, y);
      rw.swap(q + 1);
    }
    const std::size_t block = q;
    q += 2;
    return block;
  };
  auto join = [&](std::size_t block, std::int64_t power) {
    if (power * eps < 0) {
      rw.free_reduce(block + 1);
      rw.free_reduce(block);
      q -= 4;
    }
  };

  AltShape out = tau;
  out.last_beta_omitted = false;
  for (AltPiece& p : out.pieces) {
    carry(p.rho.size());
    std::size_t block = convert(a);
    carry(2 * abs_u(p.alpha) + p.sigma.size());
    join(block, p.alpha);
    block = convert(c);
    carry(2 * abs_u(p.beta));
    join(block, p.beta);
    p.alpha += eps;
    p.beta += eps;
  }
  rw.free_reduce(q);

  const std::uint64_t cost = rw.cost() - before;
  audit.check(BoundKind::PassC, cost, 2 * tau.size() + tau_len);
  if (audit.structural()) expect_window(rw, pos, out.flatten(), "pass c");
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct FormStep {
  bool swap;
  std::uint8_t offset;
  Letter letter;
};

struct LetterForm {
  std::vector<FormStep> steps;
};

FormStep E(int off, Letter l) { return FormStep{false, static_cast<std::uint8_t>(off), l}; }
FormStep W(int off) { return FormStep{true, static_cast<std::uint8_t>(off), Letter{}}; }

const LetterForm& left_form(Letter x) {
  static const std::array<LetterForm, 8> forms = [] {
    std::array<LetterForm, 8> f;
    f[a.code()] = {{E(1, C), E(3, A), E(5, C)}};
    f[b.code()] = f[a.code()];
    f[A.code()] = {{E(0, c), W(1), E(2, a), E(3, C)}};
    f[B.code()] = f[A.code()];
    f[c.code()] = {{E(1, A), E(3, C)}};
    f[d.code()] = f[c.code()];
    f[C.code()] = {{E(0, a), E(1, C)}};
    f[D.code()] = {{E(0, a), W(1), E(2, c), W(3)}};
    return f;
  }();
  return forms[x.code()];
}

const LetterForm& right_form(Letter y) {
  static const std::array<LetterForm, 8> forms = [] {
    std::array<LetterForm, 8> f;
    f[a.code()] = {{E(0, c), W(1)}};
    f[b.code()] = f[a.code()];
    f[A.code()] = {{E(0, C)}};
    f[B.code()] = f[A.code()];
    f[c.code()] = {{E(1, a), E(2, C)}};
    f[d.code()] = {{E(0, c), E(1, a), W(2), W(3)}};
    f[C.code()] = {{E(0, C), E(2, A)}};
    f[D.code()] = f[C.code()];
    return f;
  }();
  return forms[y.code()];
}

std::uint64_t run_form(Rewriter& rw, std::size_t pos, const LetterForm& form) {
  const std::uint64_t before = rw.cost();
  for (const FormStep& st : form.steps) {
    if (st.swap) {
      rw.swap(pos + st.offset);
    } else {
      rw.free_expand(pos + st.offset, st.letter);
    }
  }
  return rw.cost() - before;
}

bool flank_letter(Letter l) { return !l.is_s(); }

}  // namespace

Word left_letter_form(Letter x) {
  const AltPiece p = make_piece(Word{x}, 0);
  return p.rho + ca_power(p.alpha) + p.sigma + ac_power(p.beta) +
         power(Word{c}, x.exponent());
}

Word right_letter_form(Letter y) {
  const AltPiece p = make_piece(Word{y}, 0);
  return power(Word{c}, y.exponent()) + p.rho + ac_power(p.beta - p.alpha) + p.sigma;
}

AltShape assimilate_xy_at(Rewriter& rw, std::size_t pos, Letter x,
                          const AltShape& tau, Letter y, CostAudit& audit) {
  if (!flank_letter(x) || !flank_letter(y) || x.exponent() == y.exponent()) {
    throw BadXY(std::string("cannot assimilate ") + x.to_char() + " and " + y.to_char());
  }
  const std::size_t tau_len = tau.length();
  if (pos + tau_len + 2 > rw.size() || rw.at(pos) != x || rw.at(pos + 1 + tau_len) != y) {
    throw ShapeMismatch("word is not x tau y at the given position");
  }
  const std::uint64_t before = rw.cost();
  const std::uint64_t y_cost = run_form(rw, pos + 1 + tau_len, right_form(y));
  audit.check(BoundKind::LetterRewrite, y_cost, 2);
  const std::uint64_t x_cost = run_form(rw, pos, left_form(x));
  audit.check(BoundKind::LetterRewrite, x_cost, 2);

  const int eps = x.exponent();
  const std::size_t x_len = left_letter_form(x).size();
  const AltShape inner = pass_c_at(rw, pos + x_len - 1, tau, eps, audit);

  AltShape out;
  out.pieces.push_back(make_piece(Word{x}, 0));
  out.pieces.insert(out.pieces.end(), inner.pieces.begin(), inner.pieces.end());
  out.pieces.push_back(make_piece(Word{y}, eps));
  out.last_beta_omitted = true;

  audit.check(BoundKind::Assimilate, rw.cost() - before, 3 * tau_len + 4);
  if (audit.structural()) {
    if (!shape_consistent(out)) throw std::logic_error("assimilate: inconsistent shape");
    expect_window(rw, pos, out.flatten(), "assimilate");
  }
  return out;
}

AltShape assimilate_dyadic_at(Rewriter& rw, std::size_t pos,
                              const AltShape& bar_tau, const Interval& v_positions,
                              std::int64_t x_pos, std::int64_t y_pos,
                              CostAudit& audit, ThetaLedger* ledger) {
  const std::int64_t v_len = v_positions.size();
  if (x_pos + 1 + v_len != y_pos || (v_len > 0 && v_positions.lo != x_pos + 1)) {
    throw PositionMismatch("x and y do not flank the block");
  }
  if (bar_tau.size() < 2 ||
      static_cast<std::int64_t>(bar_tau.content_length()) != v_len + 2) {
    throw ShapeMismatch("shape does not cover x v y");
  }
  AltShape shape = bar_tau;
  auto run = [&](const std::vector<MergeStep>& steps) {
    for (const MergeStep& st : steps) {
      if (shape.pieces[st.k].content_length() != static_cast<std::size_t>(st.left.size()) ||
          shape.pieces[st.k + 1].content_length() != static_cast<std::size_t>(st.right.size())) {
        throw ShapeMismatch("piece lengths disagree with the merge step");
      }
      const std::uint64_t before = rw.cost();
      shape = merge_pieces_at(rw, pos, shape, st.k, audit);
      audit.check(BoundKind::ChargedMerge, rw.cost() - before,
                  2176 * sq(static_cast<std::uint64_t>(st.left.size())));
      if (ledger) audit.check(BoundKind::ThetaUnique, ledger->charge(st.left) ? 0 : 1, 0);
    }
  };
  if (v_len > 0) run(merge_sequence_point(v_positions, Side::Left));
  run(merge_sequence_point(Interval{x_pos, y_pos - 1}, Side::Right));
  return shape;
}

// ---------------------------------------------------------------------------

namespace {

template <typename Body>
SubroutineResult run_recorded(const Word& start, CostAudit* audit, Body&& body) {
  CostAudit local;
  CostAudit& au = audit ? *audit : local;
  SubroutineResult res;
  res.trace = record_trace(start, [&](Rewriter& rw) { res.shape = body(rw, au); });
  return res;
}

}  // namespace

SubroutineResult merge_pieces_trace(const AltShape& shape, std::size_t i,
                                    CostAudit* audit) {
  return run_recorded(shape.flatten(), audit, [&](Rewriter& rw, CostAudit& au) {
    return merge_pieces_at(rw, 0, shape, i, au);
  });
}

SubroutineResult merge_dafs(const MergeContext& ctx, CostAudit* audit,
                            ThetaLedger* ledger) {
  if (ctx.u_end != ctx.v_begin) throw NotAdjacent("u and v are not adjacent in w");
  const auto [tau_u, du] = daf(ctx.host, ctx.u_begin, ctx.u_end);
  const auto [tau_v, dv] = daf(ctx.host, ctx.v_begin, ctx.v_end);
  return run_recorded(tau_u + tau_v, audit, [&](Rewriter& rw, CostAudit& au) {
    return merge_blocks_at(rw, 0, du.shape, du.host_positions, dv.shape,
                           dv.host_positions, au, ledger);
  });
}

SubroutineResult pass_c_trace(const AltShape& tau, int eps, CostAudit* audit) {
  const Word cc{eps > 0 ? c : C};
  AltShape explicit_tau = tau;
  explicit_tau.last_beta_omitted = false;
  return run_recorded(cc + explicit_tau.flatten() + cc.inverse(), audit,
                      [&](Rewriter& rw, CostAudit& au) {
                        return pass_c_at(rw, 0, tau, eps, au);
                      });
}

SubroutineResult assimilate_xy(Letter x, const AltShape& tau, Letter y,
                               CostAudit* audit) {
  return run_recorded(Word{x} + tau.flatten() + Word{y}, audit,
                      [&](Rewriter& rw, CostAudit& au) {
                        return assimilate_xy_at(rw, 0, x, tau, y, au);
                      });
}

SubroutineResult assimilate_dyadic(const AltShape& bar_tau, const Interval& v_positions,
                                   std::int64_t x_pos, std::int64_t y_pos,
                                   CostAudit* audit, ThetaLedger* ledger) {
  return run_recorded(bar_tau.flatten(), audit, [&](Rewriter& rw, CostAudit& au) {
    return assimilate_dyadic_at(rw, 0, bar_tau, v_positions, x_pos, y_pos, au, ledger);
  });
}

}  // namespace stallings
