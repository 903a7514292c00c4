#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stallings/dyadic.hpp"
#include "stallings/rewriting.hpp"
#include "stallings/words.hpp"

namespace stallings {

// Even length, letters in {a,b,c,d}, positive at even 0-based indices and
// negative at odd ones.
bool is_alternating(const Word& u);

// Cancels s^e p s^-e pinches (p with exponent sum 0) innermost first.
// Returns true when every s letter is removed this way.
bool pinches_away(std::span<const Letter> u);

// Exponent sum 0 and equal in S to a word over {a,b,c,d}.
bool is_balanced(const Word& u);

// One block rho (ca^-1)^alpha sigma (ac^-1)^beta of an alternating shape.
struct AltPiece {
  Word rho;    // over {a,b,c}: the ab letters of the piece, substituted
  std::int64_t alpha = 0;
  Word sigma;  // over {a,c,d}: the cd letters of the piece, substituted
  std::int64_t beta = 0;

  // Letters of the s-free subword this piece stands for.
  std::size_t content_length() const { return (rho.size() + sigma.size()) / 2; }
  friend bool operator==(const AltPiece&, const AltPiece&) = default;
};

struct AltShape {
  std::vector<AltPiece> pieces;
  // Partitioned forms end in sigma_k; the trailing (ac^-1)^beta_k is then
  // not part of the word (and beta_k is 0 for balanced input).
  bool last_beta_omitted = true;

  std::size_t size() const { return pieces.size(); }
  bool empty() const { return pieces.empty(); }
  bool has_beta(std::size_t i) const {
    return !(last_beta_omitted && i + 1 == pieces.size());
  }
  // Flattened length of piece i, including its beta block when present.
  std::size_t piece_length(std::size_t i) const;
  std::size_t length() const;
  std::size_t content_length() const;
  // Offset of piece i in the flattened word.
  std::size_t offset(std::size_t i) const;

  Word flatten() const;
  Word flatten_piece(std::size_t i) const;
  // Flattened pieces [first, last), the beta of last-1 included if present.
  Word flatten_range(std::size_t first, std::size_t last) const;

  friend bool operator==(const AltShape&, const AltShape&) = default;
};

// (ca^-1)^k and (ac^-1)^k as words.
Word ca_power(std::int64_t k);
Word ac_power(std::int64_t k);

// The piece for an s-free subword given the exponent sum of everything
// before it in the partitioned word.
AltPiece make_piece(const Word& part, std::int64_t prefix_sum);

// Shape after merging pieces i and i+1.
AltShape merge_pieces(const AltShape& shape, std::size_t i);

// Partitioned alternating form of s-free balanced v with respect to the
// partition into consecutive parts of the given lengths. Throws ContainsS,
// NotBalanced, BadPartition.
AltShape paf_shape(const Word& v, const std::vector<std::size_t>& part_lengths);
Word paf(const Word& v, const std::vector<std::size_t>& part_lengths);

// Trace from v to paf(v, parts) using commutators and free moves: the
// window c^m v_i is shuffled piece by piece, left to right.
Trace paf_trace(const Word& v, const std::vector<std::size_t>& part_lengths);

std::vector<std::size_t> part_lengths(const Cover& cover);

struct DafDescriptor {
  Interval host_positions;  // positions of v-hat in w-hat; empty if v-hat is
  Cover partition;          // mdc(host_positions), or empty
  AltShape shape;
};

// Dyadic alternating form of s-free balanced v_hat placed at positions
// [lo, lo + len) of w-hat.
AltShape daf_shape(const Word& v_hat, std::int64_t lo);

// Dyadic alternating form of v = host[begin, end). Throws PositionMismatch
// and NotBalanced.
std::pair<Word, DafDescriptor> daf(const Word& host, std::size_t begin,
                                   std::size_t end);

}  // namespace stallings
