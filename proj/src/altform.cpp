#include "stallings/altform.hpp"

#include "stallings/errors.hpp"
#include "stallings/fxf.hpp"

namespace stallings {

using namespace letters;

bool is_alternating(const Word& u) {
  if (u.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_s()) return false;
    if ((u[i].exponent() > 0) != (i % 2 == 0)) return false;
  }
  return true;
}

bool pinches_away(std::span<const Letter> u) {
  struct Frame {
    Letter s;
    std::int64_t sum;
  };
  std::vector<Frame> stack;
  std::int64_t base_sum = 0;
  for (Letter l : u) {
    if (!l.is_s()) {
      (stack.empty() ? base_sum : stack.back().sum) += l.exponent();
      continue;
    }
    if (!stack.empty() && stack.back().s.is_inverse_of(l) && stack.back().sum == 0) {
      stack.pop_back();
    } else {
      stack.push_back(Frame{l, 0});
    }
  }
  return stack.empty();
}

bool is_balanced(const Word& u) {
  return exponent_sum(u) == 0 && pinches_away(u.letters());
}

// ---------------------------------------------------------------------------

Word ca_power(std::int64_t k) {
  std::vector<Letter> out;
  out.reserve(2 * static_cast<std::size_t>(k < 0 ? -k : k));
  for (std::int64_t i = 0; i < k; ++i) { out.push_back(c); out.push_back(A); }
  for (std::int64_t i = 0; i > k; --i) { out.push_back(a); out.push_back(C); }
  return Word(std::move(out));
}

Word ac_power(std::int64_t k) { return ca_power(-k); }

namespace {

std::size_t abs_size(std::int64_t k) {
  return static_cast<std::size_t>(k < 0 ? -k : k);
}

void append(std::vector<Letter>& out, const Word& w) {
  out.insert(out.end(), w.begin(), w.end());
}

void append_piece(std::vector<Letter>& out, const AltPiece& p, bool with_beta) {
  append(out, p.rho);
  append(out, ca_power(p.alpha));
  append(out, p.sigma);
  if (with_beta) append(out, ac_power(p.beta));
}

}  // namespace

std::size_t AltShape::piece_length(std::size_t i) const {
  const AltPiece& p = pieces[i];
  std::size_t n = p.rho.size() + p.sigma.size() + 2 * abs_size(p.alpha);
  if (has_beta(i)) n += 2 * abs_size(p.beta);
  return n;
}

std::size_t AltShape::length() const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) n += piece_length(i);
  return n;
}

std::size_t AltShape::content_length() const {
  std::size_t n = 0;
  for (const AltPiece& p : pieces) n += p.content_length();
  return n;
}

std::size_t AltShape::offset(std::size_t i) const {
  std::size_t n = 0;
  for (std::size_t j = 0; j < i; ++j) n += piece_length(j);
  return n;
}

Word AltShape::flatten_range(std::size_t first, std::size_t last) const {
  std::vector<Letter> out;
  for (std::size_t i = first; i < last; ++i) append_piece(out, pieces[i], has_beta(i));
  return Word(std::move(out));
}

Word AltShape::flatten() const { return flatten_range(0, pieces.size()); }

Word AltShape::flatten_piece(std::size_t i) const { return flatten_range(i, i + 1); }

AltPiece make_piece(const Word& part, std::int64_t prefix_sum) {
  AltPiece p;
  std::vector<Letter> rho;
  std::vector<Letter> sigma;
  std::int64_t lambda_sum = 0;
  std::int64_t mu_sum = 0;
  for (Letter l : part) {
    if (l.is_s()) throw ContainsS("partition piece " + part.str() + " contains s");
    if (l.in_ab()) {
      lambda_sum += l.exponent();
      if (l.exponent() > 0) {
        rho.push_back(l);
        rho.push_back(C);
      } else {
        rho.push_back(c);
        rho.push_back(l);
      }
    } else {
      mu_sum += l.exponent();
      if (l.exponent() > 0) {
        sigma.push_back(l);
        sigma.push_back(A);
      } else {
        sigma.push_back(a);
        sigma.push_back(l);
      }
    }
  }
  p.rho = Word(std::move(rho));
  p.sigma = Word(std::move(sigma));
  p.alpha = prefix_sum + lambda_sum;
  p.beta = prefix_sum + lambda_sum + mu_sum;
  return p;
}

AltShape merge_pieces(const AltShape& shape, std::size_t i) {
  if (i + 1 >= shape.size()) {
    throw IndexOutOfRange("no piece after index " + std::to_string(i));
  }
  const AltPiece& l = shape.pieces[i];
  const AltPiece& r = shape.pieces[i + 1];
  AltPiece m{l.rho + r.rho, l.alpha + r.alpha - l.beta, l.sigma + r.sigma, r.beta};
  AltShape out;
  out.last_beta_omitted = shape.last_beta_omitted;
  out.pieces.reserve(shape.size() - 1);
  out.pieces.insert(out.pieces.end(), shape.pieces.begin(),
                    shape.pieces.begin() + static_cast<std::ptrdiff_t>(i));
  out.pieces.push_back(std::move(m));
  out.pieces.insert(out.pieces.end(),
                    shape.pieces.begin() + static_cast<std::ptrdiff_t>(i) + 2,
                    shape.pieces.end());
  return out;
}

namespace {

void check_partition(const Word& v, const std::vector<std::size_t>& parts) {
  std::size_t total = 0;
  for (std::size_t len : parts) {
    if (len == 0) throw BadPartition("partition has an empty part");
    total += len;
  }
  if (total != v.size()) {
    throw BadPartition("partition lengths sum to " + std::to_string(total) +
                       ", word has length " + std::to_string(v.size()));
  }
}

void check_balanced_s_free(const Word& v) {
  for (Letter l : v) {
    if (l.is_s()) throw ContainsS("word " + v.str() + " contains s");
  }
  if (exponent_sum(v) != 0) {
    throw NotBalanced("exponent sum of " + v.str() + " is not 0");
  }
}

}  // namespace

AltShape paf_shape(const Word& v, const std::vector<std::size_t>& part_lengths) {
  check_balanced_s_free(v);
  check_partition(v, part_lengths);
  AltShape shape;
  std::size_t pos = 0;
  std::int64_t prefix = 0;
  for (std::size_t len : part_lengths) {
    shape.pieces.push_back(make_piece(v.subword(pos, len), prefix));
    prefix = shape.pieces.back().beta;
    pos += len;
  }
  return shape;
}

Word paf(const Word& v, const std::vector<std::size_t>& part_lengths) {
  return paf_shape(v, part_lengths).flatten();
}

Trace paf_trace(const Word& v, const std::vector<std::size_t>& part_lengths) {
  const AltShape shape = paf_shape(v, part_lengths);
  return record_trace(v, [&](Rewriter& rw) {
    std::size_t done = 0;  // letters of rw already in final form
    std::int64_t carry = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      const AltPiece& p = shape.pieces[i];
      const std::size_t window = abs_size(carry) + part_lengths[i];
      const Word target = p.rho + ca_power(p.alpha) + p.sigma + ac_power(p.beta) +
                          power(Word{c}, p.beta);
      shuffle_window(rw, done, window, target);
      done += target.size() - abs_size(p.beta);
      carry = p.beta;
    }
  });
}

std::vector<std::size_t> part_lengths(const Cover& cover) {
  std::vector<std::size_t> out;
  out.reserve(cover.size());
  for (const DyadicInterval& d : cover) out.push_back(static_cast<std::size_t>(d.size()));
  return out;
}

AltShape daf_shape(const Word& v_hat, std::int64_t lo) {
  if (v_hat.empty()) {
    check_balanced_s_free(v_hat);
    return AltShape{};
  }
  const Interval positions{lo, lo + static_cast<std::int64_t>(v_hat.size()) - 1};
  return paf_shape(v_hat, part_lengths(mdc(positions)));
}

std::pair<Word, DafDescriptor> daf(const Word& host, std::size_t begin,
                                   std::size_t end) {
  if (begin > end || end > host.size()) {
    throw PositionMismatch("range [" + std::to_string(begin) + ", " +
                           std::to_string(end) + ") outside host of length " +
                           std::to_string(host.size()));
  }
  const Word v = host.subword(begin, end - begin);
  if (!is_balanced(v)) throw NotBalanced(v.str() + " is not balanced");
  std::int64_t lo = 0;
  for (std::size_t i = 0; i < begin; ++i) lo += host[i].is_s() ? 0 : 1;
  const Word v_hat = strip_s(v);
  DafDescriptor desc;
  desc.host_positions = Interval{lo, lo + static_cast<std::int64_t>(v_hat.size()) - 1};
  if (!v_hat.empty()) desc.partition = mdc(desc.host_positions);
  desc.shape = daf_shape(v_hat, lo);
  return {desc.shape.flatten(), std::move(desc)};
}

}  // namespace stallings
