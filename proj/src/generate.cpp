#include "stallings/generate.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "stallings/errors.hpp"
#include "stallings/rewriting.hpp"

namespace stallings {

std::optional<GenMode> parse_gen_mode(std::string_view name) {
  if (name == "conjugates") return GenMode::Conjugates;
  if (name == "nested_pinches") return GenMode::NestedPinches;
  if (name == "commutator_heavy") return GenMode::CommutatorHeavy;
  return std::nullopt;
}

std::string gen_mode_name(GenMode mode) {
  switch (mode) {
    case GenMode::Conjugates: return "conjugates";
    case GenMode::NestedPinches: return "nested_pinches";
    case GenMode::CommutatorHeavy: return "commutator_heavy";
  }
  return "?";
}

namespace {

// Plain modulo draws keep streams identical across standard libraries.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(salt)};
    eng_.seed(seq);
  }
  std::uint64_t below(std::uint64_t k) { return eng_() % k; }
  bool one_in(std::uint64_t k) { return below(k) == 0; }
  int sign() { return below(2) == 0 ? 1 : -1; }
  Letter letter() { return Letter::from_code(static_cast<int>(below(kLetterCodes))); }
  Letter letter_of(int first_gen, int gens) {
    return Letter(static_cast<Generator>(first_gen + static_cast<int>(below(gens))), sign());
  }

 private:
  std::mt19937_64 eng_;
};

Word random_reduced(Rng& rng, std::size_t len, int first_gen, int gens) {
  std::vector<Letter> out;
  while (out.size() < len) {
    const Letter l = rng.letter_of(first_gen, gens);
    if (!out.empty() && out.back().is_inverse_of(l)) continue;
    out.push_back(l);
  }
  return Word(std::move(out));
}

// s-free, exponent sum 0: m/2 positive and m/2 negative letters, shuffled.
std::vector<Letter> balanced_letters(Rng& rng, std::size_t m) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < m; ++i) {
    out.emplace_back(static_cast<Generator>(rng.below(4)), i % 2 == 0 ? 1 : -1);
  }
  for (std::size_t i = out.size(); i > 1; --i) std::swap(out[i - 1], out[rng.below(i)]);
  return out;
}

// Lower end of the accepted length window [n - 8, n], kept nonzero for
// short targets.
std::size_t target_floor(std::size_t n) { return n > 8 ? n - 8 : std::min<std::size_t>(n, 4); }

Word fill(Rng& rng, std::size_t n, std::size_t num_factors,
          const std::function<Word(Rng&)>& factor, Word start = {}) {
  constexpr int kAttempts = 4000;
  Word cur = free_reduce(start);
  auto try_add = [&]() {
    for (int attempt = 0; attempt < 200; ++attempt) {
      Word cand = free_reduce(cur + factor(rng));
      if (cand.size() <= n) {
        cur = std::move(cand);
        return;
      }
    }
  };
  if (num_factors > 0) {
    for (std::size_t k = 0; k < num_factors; ++k) try_add();
    return cur;
  }
  if (n < 4) return cur;
  const std::size_t lo = target_floor(n);
  for (int attempt = 0; cur.size() < lo && attempt < kAttempts; ++attempt) {
    Word cand = free_reduce(cur + factor(rng));
    if (cand.size() <= n) cur = std::move(cand);
  }
  return cur;
}

Word conjugate_factor(Rng& rng, std::size_t max_conj) {
  const auto& rels = relators();
  Word r = rels[rng.below(rels.size())];
  if (rng.one_in(2)) r = r.inverse();
  const Word g = random_reduced(rng, rng.below(max_conj + 1), 0, kGenerators);
  return g + r + g.inverse();
}

Word commutator_factor(Rng& rng, std::size_t max_conj) {
  Word f;
  if (!rng.one_in(3)) {
    const Word g = random_reduced(rng, 1 + rng.below(3), 0, 2);
    const Word h = random_reduced(rng, 1 + rng.below(3), 2, 2);
    f = g.inverse() + h.inverse() + g + h;
  } else {
    const Word beta(balanced_letters(rng, 2 + 2 * rng.below(3)));
    const Word t{Letter(Generator::s, rng.sign())};
    f = t.inverse() + beta.inverse() + t + beta;
  }
  if (max_conj > 0 && rng.one_in(2)) {
    const Word g = random_reduced(rng, 1 + rng.below(max_conj), 0, kGenerators);
    f = g + f + g.inverse();
  }
  return f;
}

// Wraps runs of balanced chunks of u in s^e ... s^-e, recursively inside
// each chunk as well. The result equals u in S.
class Nester {
 public:
  explicit Nester(Rng& rng) : rng_(rng) {}

  std::vector<Letter> nest(const std::vector<Letter>& u, int depth) {
    const std::size_t len = u.size();
    const std::vector<std::size_t> nxt = next_return(u);
    std::vector<Letter> out;
    std::size_t i = 0;
    while (i < len) {
      std::size_t j = nxt[i];
      if (j > len) {
        out.push_back(u[i++]);
        continue;
      }
      while (rng_.one_in(3) && nxt[j] <= len) j = nxt[j];
      const bool wrap = depth > 0 && rng_.one_in(2);
      const Letter t(Generator::s, rng_.sign());
      if (wrap) out.push_back(t);
      for (std::size_t k = i; k < j; k = nxt[k]) {
        const std::size_t end = nxt[k];
        out.push_back(u[k]);
        const std::vector<Letter> inner(u.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                                        u.begin() + static_cast<std::ptrdiff_t>(end) - 1);
        const auto nested = nest(inner, depth - 1);
        out.insert(out.end(), nested.begin(), nested.end());
        out.push_back(u[end - 1]);
      }
      if (wrap) out.push_back(t.inverse());
      i = j;
    }
    return out;
  }

 private:
  // nxt[i]: least j > i with equal prefix exponent sums at i and j, or
  // len + 1 when there is none.
  static std::vector<std::size_t> next_return(const std::vector<Letter>& u) {
    const std::size_t len = u.size();
    std::vector<std::int64_t> ps(len + 1, 0);
    for (std::size_t i = 0; i < len; ++i) ps[i + 1] = ps[i] + u[i].exponent();
    std::vector<std::size_t> nxt(len + 1, len + 1);
    std::vector<std::size_t> last(2 * len + 3, len + 1);
    for (std::size_t i = len + 1; i-- > 0;) {
      const std::size_t key = static_cast<std::size_t>(ps[i] + static_cast<std::int64_t>(len) + 1);
      nxt[i] = last[key];
      last[key] = i;
    }
    return nxt;
  }

  Rng& rng_;
};

Word nested_pinch_word(Rng& rng, std::size_t m, int depth) {
  Nester nester(rng);
  const std::vector<Letter> base = balanced_letters(rng, m);
  const std::vector<Letter> p = nester.nest(base, depth);

  // Another word equal to base in F(a,b) x F(c,d): riffle the ab and cd
  // subsequences and sprinkle in cancelling pairs.
  std::vector<Letter> ab;
  std::vector<Letter> cd;
  for (Letter l : base) (l.in_ab() ? ab : cd).push_back(l);
  std::vector<Letter> q_hat;
  std::size_t ia = 0;
  std::size_t ic = 0;
  while (ia < ab.size() || ic < cd.size()) {
    if (rng.one_in(8)) {
      const Letter x = Letter(static_cast<Generator>(rng.below(4)), rng.sign());
      q_hat.push_back(x);
      q_hat.push_back(x.inverse());
    }
    const bool take_ab = ic == cd.size() || (ia < ab.size() && rng.one_in(2));
    q_hat.push_back(take_ab ? ab[ia++] : cd[ic++]);
  }
  const std::vector<Letter> q = nester.nest(q_hat, depth);
  return free_reduce(Word(p) + Word(q).inverse());
}

Word nested_pinches(Rng& rng, std::size_t n) {
  constexpr int kDepth = 8;
  if (n < 4) return Word{};
  const std::size_t lo = target_floor(n);
  std::size_t m = n / 3 + (n / 3) % 2;
  Word best;
  for (int attempt = 0; attempt < 60; ++attempt) {
    Word cand = nested_pinch_word(rng, m, kDepth);
    if (cand.size() <= n && cand.size() > best.size()) best = cand;
    if (cand.size() >= lo && cand.size() <= n) return cand;
    if (cand.size() > n) {
      m = m > 2 ? m - 2 : 0;
    } else {
      m += 2;
    }
  }
  return fill(rng, n, 0, [](Rng& r) { return conjugate_factor(r, 0); }, best);
}

}  // namespace

Word generate(const GenProfile& profile, std::size_t n) {
  if (n % 2 != 0) throw BadLength("target length " + std::to_string(n) + " is odd");
  Rng rng(profile.rng_seed, n, static_cast<std::uint64_t>(profile.mode));
  const std::size_t conj = profile.max_conjugator_length;
  switch (profile.mode) {
    case GenMode::Conjugates:
      return fill(rng, n, profile.num_factors,
                  [conj](Rng& r) { return conjugate_factor(r, conj); });
    case GenMode::CommutatorHeavy:
      return fill(rng, n, profile.num_factors,
                  [conj](Rng& r) { return commutator_factor(r, conj); });
    case GenMode::NestedPinches:
      return nested_pinches(rng, n);
  }
  return Word{};
}

Word random_word(std::uint64_t seed, std::size_t n) {
  Rng rng(seed, n, 0x5eed);
  std::vector<Letter> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.letter());
  return Word(std::move(out));
}

}  // namespace stallings
