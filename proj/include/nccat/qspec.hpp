#pragma once

// The q-specialization chi_q: x_k -> q^{k(k-1)/2}, q-integers and
// q-binomials, the (q,1) Garsia-Haiman polynomials, and exact determinants
// over integral domains.

#include <cstdint>

#include <gmpxx.h>

#include "nccat/matrix.hpp"
#include "nccat/qpoly.hpp"

namespace Eigen {

template <>
struct NumTraits<nccat::QPoly> {
  using Real = nccat::QPoly;
  using NonInteger = nccat::QPoly;
  using Literal = nccat::QPoly;
  using Nested = nccat::QPoly;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 50
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Literal = mpz_class;
  using Nested = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nccat {

using QMatrix = Mat<QPoly>;
using IntMatrix = Mat<Integer>;

/// Ring map ZF -> Z[q, q^{-1}], x_k -> q^{k(k-1)/2}.
QPoly chi_q(const NCPoly& p);
QPoly::Exponent chi_q_exponent(const Word& w);

/// [k]_q = 1 + q + ... + q^{k-1}.
QPoly q_int(unsigned k);
QPoly q_factorial(unsigned n);

/// [n]_q! / ([k]_q! [n-k]_q!); zero unless 0 <= k <= n.
QPoly q_binomial(unsigned n, unsigned k);

/// c_n^k(q, 1): c_n^0 = 1 and
/// c_n^k = sum_{r=1}^k [r+n-k, r]_q q^{r(r-1)/2} c_{k-1}^{k-r}.
/// Requires k <= n.
const QPoly& gh_cnk(unsigned n, unsigned k);

/// Fraction-free (Bareiss) determinant over an integral domain. Needs an
/// exact_div(Scalar, Scalar) overload.
template <class Scalar>
Scalar bareiss_determinant(Mat<Scalar> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && a(pivot, k) == Scalar(0)) ++pivot;
      if (pivot == n) return Scalar(0);
      a.row(k).swap(a.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = a(k, k) * a(i, j);
        t -= a(i, k) * a(k, j);
        a(i, j) = exact_div(t, previous);
      }
    }
    previous = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Determinant over Z[q, q^{-1}]: each row is first multiplied by the
/// q-power that makes its lowest exponent 0, Bareiss runs on the result, and
/// the removed powers are restored.
QPoly determinant(const QMatrix& a);

/// det(c_{i+j+m}(q, 1))_{0<=i,j<=n}, computed.
QPoly q_hankel_det(unsigned m, unsigned n);

/// q^{n(n+1)(4n-1+6m)/6}.
QPoly q_hankel_det_closed_form(unsigned m, unsigned n);

}  // namespace nccat
