#pragma once

// The integer group ring ZF of the free group: finite Z-combinations of
// reduced words, plus the ring maps used throughout the library.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nccat/word.hpp"

namespace nccat {

using Integer = mpz_class;

/// Element of ZF. Terms are kept sorted in canonical word order with no
/// zero coefficients; the zero polynomial has no terms.
class NCPoly {
 public:
  using Term = std::pair<Word, Integer>;

  NCPoly() = default;
  /// c times the identity word.
  NCPoly(int c);  // NOLINT(google-explicit-constructor): Eigen builds scalars from 0 and 1
  explicit NCPoly(const Integer& c);
  explicit NCPoly(Word w, Integer c = 1);

  /// Combines equal words and drops zeros; any input order.
  static NCPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Integer coefficient(const Word& w) const;
  std::uint32_t max_index() const;

  NCPoly& operator+=(const NCPoly& rhs);
  NCPoly& operator-=(const NCPoly& rhs);
  NCPoly& operator*=(const NCPoly& rhs);

  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const Word& w);
  friend NCPoly operator*(const Word& w, const NCPoly& a);
  NCPoly operator-() const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  std::vector<Term> terms_;
};

/// Hash-map accumulator for building large sums before canonicalizing.
class TermAccumulator {
 public:
  void add(const Word& w, const Integer& c);
  void add(Word&& w, const Integer& c);
  void add(const NCPoly& p, const Integer& scale = 1);
  NCPoly finish() &&;

 private:
  std::unordered_map<Word, Integer, WordHash> terms_;
};

/// Applies a group homomorphism F -> F given by its value on single letters
/// x_k^e and extends linearly.
NCPoly map_words(const NCPoly& p, const std::function<Word(const Letter&)>& letter_image);

/// Anti-automorphism fixing every x_k: reverses each word.
NCPoly bar(const NCPoly& p);
Word bar(const Word& w);

/// T^r: x_k -> x_{k+r}.
NCPoly shift(const NCPoly& p, std::uint32_t r);
Word shift(const Word& w, std::uint32_t r);

/// Counit, x_k -> 1.
Integer eps(const NCPoly& p);

/// x_k -> x0^k x1^k.
NCPoly sigma(const NCPoly& p);
Word sigma(const Word& w);

/// x_k -> x0 (x0^{-1} x1)^k.
NCPoly pi(const NCPoly& p);
Word pi(const Word& w);

/// x_k^e as a polynomial.
inline NCPoly x(std::uint32_t k, std::int32_t e = 1) { return NCPoly(Word::generator(k, e)); }

}  // namespace nccat
