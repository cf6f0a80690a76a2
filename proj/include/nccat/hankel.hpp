#pragma once

// Hankel-Catalan matrices H_m^n = (C_{m+i+j})_{0<=i,j<=n}, their Gauss
// factors, explicit inverses and bordered quasideterminants. The explicit
// inverses are only known for m in {0, 1}.

#include <json.hpp>

#include "nccat/matrix.hpp"

namespace nccat {

NCMatrix hankel(unsigned m, unsigned n);

/// Lower unitriangular factor: (row j, col i) = C~_{i+j+m}^{j-i}, i <= j.
NCMatrix gauss_L(unsigned m, unsigned n);

/// Upper factor: (i, j) = bar(C_{i+j+m}^{j-i}), i <= j; diagonal x_{2i+m}.
NCMatrix gauss_U(unsigned m, unsigned n);

/// (row j, col i) = (-1)^{i+j} B(i+j+m, j-i), i <= j.
NCMatrix inv_L(unsigned m, unsigned n);

/// (i, j) = (-1)^{i+j} bar(B(i+j+m, j-i)) x_{2j+m}^{-1}, i <= j.
NCMatrix inv_U(unsigned m, unsigned n);

/// inv_U(m, n) * inv_L(m, n). Throws std::invalid_argument for m > 1.
NCMatrix hankel_inverse(unsigned m, unsigned n);

/// Quasideterminant at the boxed corner of the (i+1)x(i+1) matrix made of
/// Hankel rows 0..i-1 and row j, columns 0..i:
///   C_{m+i+j} - (C_{m+j} ... C_{m+j+i-1}) (H_m^{i-1})^{-1} (C_{m+i} ... C_{m+2i-1})^T.
/// Requires i <= j and m in {0, 1}.
NCPoly quasidet_bordered(unsigned m, unsigned i, unsigned j);

/// Row-major array of rows of canonical polynomial strings.
nlohmann::json to_json(const NCMatrix& a);

}  // namespace nccat
