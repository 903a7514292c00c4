#pragma once

#include <cstdint>

#include "stallings/rewriting.hpp"
#include "stallings/words.hpp"

namespace stallings {

// Canonical representative of an element of F(a,b) x F(c,d).
struct FxFNormalForm {
  Word ab_part;
  Word cd_part;
  friend bool operator==(const FxFNormalForm&, const FxFNormalForm&) = default;
};

// Throws ContainsS if u has an s letter.
FxFNormalForm fxf_normal_form(const Word& u);
bool fxf_equal(const Word& u, const Word& v);

// Number of (cd letter, later ab letter) pairs: the swaps needed to sort u.
std::uint64_t ab_inversions(std::span<const Letter> u);

inline std::uint64_t shuffle_bound(std::uint64_t len_u, std::uint64_t len_v) {
  return len_u * len_u + len_v * len_v;
}

// Rewrites rw[pos, pos+len) into target: sort the ab letters to the front,
// freely reduce, then undo the same procedure for target. Returns the
// relator count, which is ab_inversions(window) + ab_inversions(target).
// Throws NotEqualInFxF if the window and target differ in F(a,b) x F(c,d).
std::uint64_t shuffle_window(Rewriter& rw, std::size_t pos, std::size_t len,
                             const Word& target);

// Trace from u to v (both s-free, equal in F(a,b) x F(c,d)).
Trace shuffle(const Word& u, const Word& v);

}  // namespace stallings
