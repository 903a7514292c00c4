#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "stallings/words.hpp"

namespace stallings {

enum class GenMode { Conjugates, NestedPinches, CommutatorHeavy };

std::optional<GenMode> parse_gen_mode(std::string_view name);
std::string gen_mode_name(GenMode mode);

struct GenProfile {
  GenMode mode = GenMode::Conjugates;
  // 0: add factors until the length lands in [n - 8, n]. Otherwise exactly
  // this many factors (conjugates and commutator_heavy modes).
  std::size_t num_factors = 0;
  std::size_t max_conjugator_length = 4;
  std::uint64_t rng_seed = 0;
};

// A freely reduced word of length <= n representing 1, deterministic in
// (profile, n). Throws BadLength for odd n.
Word generate(const GenProfile& profile, std::size_t n);

// Uniformly random word of length n over all ten letters.
Word random_word(std::uint64_t seed, std::size_t n);

}  // namespace stallings
