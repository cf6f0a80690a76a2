#include "nccat/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace nccat {

Word::Word(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push_back(l);
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::generator(std::uint32_t index, std::int32_t exponent) {
  Word w;
  w.push_back({index, exponent});
  return w;
}

void Word::push_back(Letter l) {
  if (l.exponent == 0) return;
  if (!letters_.empty() && letters_.back().index == l.index) {
    letters_.back().exponent += l.exponent;
    if (letters_.back().exponent == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

Word& Word::operator*=(const Word& rhs) {
  // Cancellation can only happen at the seam, so find how far it reaches
  // before touching storage.
  std::size_t a = letters_.size();
  std::size_t b = 0;
  while (a > 0 && b < rhs.letters_.size() && letters_[a - 1].index == rhs.letters_[b].index &&
         letters_[a - 1].exponent + rhs.letters_[b].exponent == 0) {
    --a;
    ++b;
  }
  letters_.resize(a);
  if (b == rhs.letters_.size()) return *this;
  letters_.reserve(a + rhs.letters_.size() - b);
  push_back(rhs.letters_[b]);
  letters_.insert(letters_.end(), rhs.letters_.begin() + static_cast<std::ptrdiff_t>(b) + 1,
                  rhs.letters_.end());
  return *this;
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->index, -it->exponent});
  return w;
}

std::int64_t Word::degree() const {
  std::int64_t d = 0;
  for (const Letter& l : letters_) d += l.exponent;
  return d;
}

std::uint32_t Word::max_index() const {
  std::uint32_t m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.index);
  return m;
}

std::strong_ordering canonical_compare(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i].index <=> b[i].index; c != 0) return c;
    if (auto c = a[i].exponent <=> b[i].exponent; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const Letter& l : w.letters()) {
    std::uint64_t v = (std::uint64_t{l.index} << 32) ^ static_cast<std::uint32_t>(l.exponent);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Word y(std::uint32_t i) {
  if (i == 0) throw std::invalid_argument("y_i is defined for i >= 1");
  return Word{{i, 1}, {i - 1, -1}};
}

bool is_alternating(const Word& w) {
  if (w.empty() || w.size() % 2 == 0) return false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].exponent != (i % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

}  // namespace nccat
