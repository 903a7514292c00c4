#pragma once

#include <algorithm>
#include <cstddef>
#include <cstring>
#include <vector>

#include "stallings/words.hpp"

namespace stallings {

// Gap buffer of letters. Rewriting is local (the moves of every subroutine
// walk through a window), so inserting or erasing next to the previous edit
// costs O(distance) instead of O(length).
class LetterBuffer {
 public:
  LetterBuffer() : data_(16), gap_begin_(0), gap_end_(16) {}
  explicit LetterBuffer(const Word& w) : LetterBuffer() { assign(w); }

  void assign(const Word& w) {
    const std::size_t cap = std::max<std::size_t>(16, 2 * w.size());
    data_.assign(cap, Letter{});
    std::copy(w.begin(), w.end(), data_.begin());
    gap_begin_ = w.size();
    gap_end_ = cap;
  }

  std::size_t size() const { return data_.size() - (gap_end_ - gap_begin_); }

  Letter operator[](std::size_t i) const {
    return data_[i < gap_begin_ ? i : i + (gap_end_ - gap_begin_)];
  }
  void set(std::size_t i, Letter l) {
    data_[i < gap_begin_ ? i : i + (gap_end_ - gap_begin_)] = l;
  }

  // Inserts x, y before position pos.
  void insert_pair(std::size_t pos, Letter x, Letter y) {
    reserve_gap(2);
    move_gap(pos);
    data_[gap_begin_++] = x;
    data_[gap_begin_++] = y;
  }

  void erase(std::size_t pos, std::size_t count) {
    move_gap(pos);
    gap_end_ += count;
  }

  // Replaces count letters at pos with the given letters.
  void replace(std::size_t pos, std::size_t count, const Letter* src,
               std::size_t n) {
    if (count == n) {
      for (std::size_t i = 0; i < n; ++i) set(pos + i, src[i]);
      return;
    }
    if (n > count) reserve_gap(n - count);
    move_gap(pos);
    gap_end_ += count;
    for (std::size_t i = 0; i < n; ++i) data_[gap_begin_++] = src[i];
  }

  Word slice(std::size_t pos, std::size_t len) const {
    std::vector<Letter> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back((*this)[pos + i]);
    return Word(std::move(out));
  }
  Word word() const { return slice(0, size()); }

 private:
  void move_gap(std::size_t pos) {
    if (pos < gap_begin_) {
      const std::size_t n = gap_begin_ - pos;
      std::memmove(&data_[gap_end_ - n], &data_[pos], n * sizeof(Letter));
      gap_begin_ = pos;
      gap_end_ -= n;
    } else if (pos > gap_begin_) {
      const std::size_t n = pos - gap_begin_;
      std::memmove(&data_[gap_begin_], &data_[gap_end_], n * sizeof(Letter));
      gap_begin_ += n;
      gap_end_ += n;
    }
  }

  void reserve_gap(std::size_t need) {
    if (gap_end_ - gap_begin_ >= need) return;
    const std::size_t old_cap = data_.size();
    const std::size_t new_cap = std::max(2 * old_cap, old_cap + need + 16);
    const std::size_t tail = old_cap - gap_end_;
    std::vector<Letter> grown(new_cap);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(gap_begin_),
              grown.begin());
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(gap_end_), data_.end(),
              grown.end() - static_cast<std::ptrdiff_t>(tail));
    data_ = std::move(grown);
    gap_end_ = new_cap - tail;
  }

  std::vector<Letter> data_;
  std::size_t gap_begin_;
  std::size_t gap_end_;
};

}  // namespace stallings
