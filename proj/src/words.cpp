#include "stallings/words.hpp"

#include <ostream>

#include "stallings/errors.hpp"

namespace stallings {

namespace {
constexpr char kLower[kGenerators] = {'a', 'b', 'c', 'd', 's'};
constexpr char kUpper[kGenerators] = {'A', 'B', 'C', 'D', 'S'};
}  // namespace

Letter Letter::from_char(char ch, std::size_t position) {
  for (int g = 0; g < kGenerators; ++g) {
    if (ch == kLower[g]) return Letter(static_cast<Generator>(g), 1);
    if (ch == kUpper[g]) return Letter(static_cast<Generator>(g), -1);
  }
  throw ParseError(position, std::string("unexpected character '") + ch + "'");
}

char Letter::to_char() const {
  const int g = static_cast<int>(generator());
  return exponent() > 0 ? kLower[g] : kUpper[g];
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    out.push_back(Letter::from_char(text[i], i));
  }
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.to_char());
  return out;
}

Word operator+(const Word& x, const Word& y) {
  std::vector<Letter> out;
  out.reserve(x.size() + y.size());
  out.insert(out.end(), x.letters_.begin(), x.letters_.end());
  out.insert(out.end(), y.letters_.begin(), y.letters_.end());
  return Word(std::move(out));
}

Word parse_word(std::string_view text) { return Word::parse(text); }

std::string to_string(const Word& u) { return u.str(); }

Word free_reduce(const Word& u) {
  std::vector<Letter> stack;
  stack.reserve(u.size());
  for (Letter l : u) {
    if (!stack.empty() && stack.back().is_inverse_of(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

std::int64_t exponent_sum(std::span<const Letter> u) {
  std::int64_t sum = 0;
  for (Letter l : u) sum += l.exponent();
  return sum;
}

Word strip_s(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (Letter l : u) {
    if (!l.is_s()) out.push_back(l);
  }
  return Word(std::move(out));
}

Word power(const Word& x, std::int64_t k) {
  const Word base = k >= 0 ? x : x.inverse();
  const std::int64_t reps = k >= 0 ? k : -k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (std::int64_t i = 0; i < reps; ++i) {
    out.insert(out.end(), base.begin(), base.end());
  }
  return Word(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Word& u) {
  return os << u.str();
}

}  // namespace stallings
