#pragma once

// Noncommutative binomial coefficients of the first kind B(n, k) and the
// second kind B'(n, k), and their relation to truncated Catalan numbers.

#include <vector>

#include "nccat/ncpoly.hpp"

namespace nccat {

/// Strictly increasing subset {j1 < ... < jk} of [1, n].
using Subset = std::vector<unsigned>;

/// All k-subsets of [1, n] in lexicographic order.
std::vector<Subset> k_subsets(unsigned n, unsigned k);

/// y_J = y_{jk + k - 1} ... y_{j2 + 1} y_{j1}.
Word y_first(const Subset& j);

/// y'_J = y_{j1 + k - 1} y_{j2 + k - 3} ... y_{jk + 1 - k}; the s-th factor is
/// y_{js + k + 1 - 2s}.
Word y_second(const Subset& j);

/// Sum of y_J over k-subsets of [1, n]; zero unless 0 <= k <= n.
const NCPoly& binom_first(unsigned n, unsigned k);
const NCPoly& binom_second(unsigned n, unsigned k);

/// Pascal-rule builders, independent of subset enumeration:
///   B(n+1, k)  = B(n, k) + y_{n+k} B(n, k-1)
///   B'(n+1, k) = T(B'(n, k)) + y_k B'(n, k-1)
const NCPoly& binom_first_pascal(unsigned n, unsigned k);
const NCPoly& binom_second_pascal(unsigned n, unsigned k);

/// Subsets {0 = j0 < j1 < ... < jl = k} of [0, k] for k >= 1, ordered by l
/// then lexicographically.
std::vector<std::vector<unsigned>> compositions(unsigned k);

/// C~_n^k as the signed sum over compositions J of
/// B(n + j_{l-1} + j_l - k, j_l - j_{l-1}) ... B(n + j0 + j1 - k, j1 - j0)
/// with sign (-1)^{k+1-|J|}. Requires k <= n.
NCPoly cnk_from_binomials(unsigned n, unsigned k);

/// B(n, k) as the signed sum over compositions J of products of
/// C~_{n + j_{s-1} + j_s - k}^{j_s - j_{s-1}}, taken with the largest offsets
/// on the left (the order the unitriangular inverse produces). Requires
/// k <= n.
NCPoly binom_from_cnk(unsigned n, unsigned k);

}  // namespace nccat
