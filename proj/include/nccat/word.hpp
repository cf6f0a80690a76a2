#pragma once

// Reduced words in the free group on generators x0, x1, x2, ...

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nccat {

/// A power x_index^exponent of one free generator. The exponent is never 0
/// inside a reduced Word.
struct Letter {
  std::uint32_t index = 0;
  std::int32_t exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Element of the free group F, stored in reduced form: no zero exponents
/// and no two adjacent letters with the same index. The empty word is the
/// identity.
class Word {
 public:
  Word() = default;

  /// Reduces the given letters (merging equal neighbours, cascading).
  explicit Word(std::span<const Letter> letters);
  Word(std::initializer_list<Letter> letters);

  /// x_index^exponent; the identity when exponent is 0.
  static Word generator(std::uint32_t index, std::int32_t exponent = 1);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Appends one letter, reducing against the current tail.
  void push_back(Letter l);

  Word& operator*=(const Word& rhs);
  friend Word operator*(Word lhs, const Word& rhs) {
    lhs *= rhs;
    return lhs;
  }

  Word inverse() const;

  /// Sum of exponents.
  std::int64_t degree() const;
  /// Largest generator index used (0 for the identity).
  std::uint32_t max_index() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word inverse(const Word& w) { return w.inverse(); }

/// Serialization order: shorter words first, then lexicographic on the
/// flattened (index, exponent) sequence.
std::strong_ordering canonical_compare(const Word& a, const Word& b);

struct CanonicalLess {
  bool operator()(const Word& a, const Word& b) const { return canonical_compare(a, b) < 0; }
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// y_i = x_i x_{i-1}^{-1}; throws std::invalid_argument for i = 0.
Word y(std::uint32_t i);

/// True if the word is x_{i1} x_{i2}^{-1} x_{i3} ... x_{is}: exponents
/// alternate +1, -1, ..., ending in +1.
bool is_alternating(const Word& w);

}  // namespace nccat
