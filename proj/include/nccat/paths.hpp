#pragma once

// Monotone lattice paths (0,0) -> (n,n) and the J-sequences indexing them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nccat/word.hpp"

namespace nccat {

enum class Step : std::uint8_t { East, North };

/// Monotone path of 2n unit steps. Catalan paths never go above the
/// diagonal: every point (a, b) has content a - b >= 0.
class LatticePath {
 public:
  LatticePath() = default;
  /// Throws std::invalid_argument unless the steps form a monotone path
  /// with n East and n North steps.
  explicit LatticePath(std::vector<Step> steps);

  static LatticePath from_string(std::string_view es);

  unsigned n() const { return static_cast<unsigned>(steps_.size() / 2); }
  const std::vector<Step>& steps() const { return steps_; }
  bool is_catalan() const;

  /// Height of the last East step, i.e. y of the rightmost southeast corner
  /// (n, y). Zero for the empty path.
  unsigned last_east_height() const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

std::string to_string(const LatticePath& p);

/// Catalan paths of size n; with k given only those whose rightmost
/// southeast corner (n, y) has y <= k. Throws std::invalid_argument if k > n.
std::vector<LatticePath> enumerate_paths(unsigned n, std::optional<unsigned> k = std::nullopt);

/// Ordered product over corners of x_{c(p)} (southeast) or x_{c(p)}^{-1}
/// (northwest). The path is read with a virtual East step before (0,0) and a
/// virtual North step after (n,n); this is a no-op for n >= 1 and makes the
/// empty path contribute x0.
Word path_monomial(const LatticePath& p);

/// The involution (a, b) -> (n - b, n - a): reverse and swap East/North.
LatticePath path_reflect(const LatticePath& p);

/// Monomial in x0, x1 obtained from the jump sequence of the path; computed
/// as sigma(path_monomial(p)).
Word jump_monomial(const LatticePath& p);

/// Nondecreasing (j1, ..., jk) with s <= j_s <= n.
struct JSeq {
  unsigned n = 0;
  std::vector<unsigned> entries;

  friend bool operator==(const JSeq&, const JSeq&) = default;
};

/// All J-sequences for (n, k) in lexicographic order. Throws
/// std::invalid_argument if k > n.
std::vector<JSeq> enumerate_jseq(unsigned n, unsigned k);

/// y_{j1} y_{j2 - 1} ... y_{jk - k + 1}.
Word jseq_word(const JSeq& j);

/// j_s(P) = least x-coordinate of a point of P at height s, s = 1..k.
JSeq path_to_jseq(const LatticePath& p, unsigned k);

}  // namespace nccat
