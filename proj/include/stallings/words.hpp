#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stallings {

enum class Generator : std::uint8_t { a = 0, b = 1, c = 2, d = 3, s = 4 };

inline constexpr int kGenerators = 5;
inline constexpr int kLetterCodes = 2 * kGenerators;

// A generator with exponent +1 or -1, packed as 2*generator + (exponent < 0).
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Generator g, int exponent)
      : code_(static_cast<std::uint8_t>(2 * static_cast<int>(g) +
                                        (exponent < 0 ? 1 : 0))) {}

  static constexpr Letter from_code(int code) {
    Letter l;
    l.code_ = static_cast<std::uint8_t>(code);
    return l;
  }
  // Lowercase is exponent +1, uppercase -1. Throws ParseError on anything
  // outside [a-dsA-DS].
  static Letter from_char(char ch, std::size_t position = 0);

  constexpr int code() const { return code_; }
  constexpr Generator generator() const {
    return static_cast<Generator>(code_ >> 1);
  }
  constexpr int exponent() const { return (code_ & 1) ? -1 : 1; }
  constexpr Letter inverse() const { return from_code(code_ ^ 1); }

  constexpr bool is_s() const { return generator() == Generator::s; }
  constexpr bool in_ab() const { return code_ < 4; }
  constexpr bool in_cd() const { return code_ >= 4 && code_ < 8; }
  constexpr bool is_inverse_of(Letter other) const {
    return (code_ ^ 1) == other.code_;
  }
  char to_char() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  std::uint8_t code_ = 0;
};

namespace letters {
inline constexpr Letter a{Generator::a, 1};
inline constexpr Letter A{Generator::a, -1};
inline constexpr Letter b{Generator::b, 1};
inline constexpr Letter B{Generator::b, -1};
inline constexpr Letter c{Generator::c, 1};
inline constexpr Letter C{Generator::c, -1};
inline constexpr Letter d{Generator::d, 1};
inline constexpr Letter D{Generator::d, -1};
inline constexpr Letter s{Generator::s, 1};
inline constexpr Letter S{Generator::s, -1};
}  // namespace letters

// An immutable sequence of letters. Equality is letter-by-letter; no free
// reduction is ever performed implicitly.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  template <typename It>
  Word(It first, It last) : letters_(first, last) {}

  // Parses the ASCII encoding ([a-dsA-DS]*).
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  const_iterator begin() const { return letters_.begin(); }
  const_iterator end() const { return letters_.end(); }
  std::span<const Letter> letters() const { return letters_; }

  Word subword(std::size_t pos, std::size_t len) const {
    return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  }
  Word inverse() const;
  std::string str() const;

  friend Word operator+(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word parse_word(std::string_view text);
std::string to_string(const Word& u);

// The iterated cancellation of adjacent inverse pairs.
Word free_reduce(const Word& u);
std::int64_t exponent_sum(std::span<const Letter> u);
inline std::int64_t exponent_sum(const Word& u) {
  return exponent_sum(u.letters());
}
// u with every s^{+-1} deleted.
Word strip_s(const Word& u);

// x^k as a word; negative k gives (x^-1)^|k|.
Word power(const Word& x, std::int64_t k);

std::ostream& operator<<(std::ostream& os, const Word& u);

}  // namespace stallings
