#pragma once

// Seeded generators for property checks.

#include <cstdint>
#include <random>

#include "nccat/ncpoly.hpp"

namespace nccat {

struct RandomShape {
  std::uint32_t max_index = 4;
  std::size_t max_letters = 5;
  std::int32_t max_exponent = 2;
  std::size_t max_terms = 4;
  int max_coeff = 3;
};

Word random_word(std::mt19937_64& rng, const RandomShape& shape);
NCPoly random_poly(std::mt19937_64& rng, const RandomShape& shape);

/// x_{i1} x_{i2}^{-1} x_{i3} ... x_{is} with s odd (before reduction).
Word random_alternating_word(std::mt19937_64& rng, std::uint32_t max_index, std::size_t max_letters);

/// Z-combination of random alternating words.
NCPoly random_alternating_poly(std::mt19937_64& rng, std::uint32_t max_index, std::size_t max_letters,
                               std::size_t max_terms);

}  // namespace nccat
