#pragma once

// Noncommutative Catalan numbers and their truncated and two-letter
// relatives. The main constructors use recursions over (n, k) with
// memoization; the *_oracle functions sum over paths or J-sequences directly
// and are meant for cross-checking.

#include "nccat/ncpoly.hpp"

namespace nccat {

/// Enumeration-based oracles refuse n above this bound.
inline constexpr unsigned kOracleMaxN = 14;

/// C_n = sum over Catalan paths P of M_P, built as tilde(n, n) * x0.
const NCPoly& catalan(unsigned n);

/// C~_n^k = C_n^k x_{n-k}^{-1}, via C~_n^k = C~_{n-1}^k + C~_n^{k-1} y_{n+1-k}
/// with C~_n^0 = 1. Zero when k > n.
const NCPoly& truncated_tilde(unsigned n, unsigned k);

/// C_n^k: paths whose rightmost southeast corner has height <= k. Zero when
/// k > n.
NCPoly truncated(unsigned n, unsigned k);

/// Sum of path monomials over all Catalan paths of size n.
NCPoly catalan_oracle(unsigned n);

/// Sum of y_j over the J-sequences for (n, k).
NCPoly tilde_oracle(unsigned n, unsigned k);

/// sigma(C_n), from the two-letter recursion
/// C_{n+1} = sum_k C_k x0 C_{n-k} x1 with C_0 = 1.
const NCPoly& underline_catalan(unsigned n);

/// sigma(C_n^k) x1^{k-n}, from D_n^k = D_n^{k-1} x1 + D_{n-1}^k x0 with
/// D_n^0 = x0^n. Zero when k > n.
const NCPoly& dd_truncated(unsigned n, unsigned k);

}  // namespace nccat
