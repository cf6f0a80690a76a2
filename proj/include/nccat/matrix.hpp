#pragma once

// Dense matrices over the (noncommutative) rings of this library, as Eigen
// matrices with custom scalar types. Products go through lazyProduct so each
// entry is sum_k lhs(i,k) * rhs(k,j) with the factor order preserved.

#include <stdexcept>

#include <Eigen/Core>

#include "nccat/ncpoly.hpp"

namespace Eigen {

template <>
struct NumTraits<nccat::NCPoly> {
  using Real = nccat::NCPoly;
  using NonInteger = nccat::NCPoly;
  using Literal = nccat::NCPoly;
  using Nested = nccat::NCPoly;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace nccat {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using NCMatrix = Mat<NCPoly>;

template <class Scalar>
Mat<Scalar> mat_identity(Eigen::Index n) {
  return Mat<Scalar>::Identity(n, n);
}

template <class Scalar>
Mat<Scalar> mat_mul(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimensions differ");
  return a.lazyProduct(b);
}

template <class Scalar>
bool is_lower_unitriangular(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    if (!(a(r, r) == Scalar(1))) return false;
    for (Eigen::Index c = r + 1; c < a.cols(); ++c) {
      if (!(a(r, c) == Scalar(0))) return false;
    }
  }
  return true;
}

/// Inverse of a lower unitriangular matrix over any associative unital ring.
/// Entry (j, i) is the signed sum over descending chains
/// j = i1 > i2 > ... > ik = i of (-1)^{k-1} a(i1,i2) ... a(i_{k-1},ik); the
/// chains are grouped by their first step, which gives
/// R(j,i) = -sum_{i <= l < j} a(j,l) R(l,i).
template <class Scalar>
Mat<Scalar> invert_unitriangular(const Mat<Scalar>& a) {
  if (!is_lower_unitriangular(a))
    throw std::invalid_argument("invert_unitriangular: matrix is not lower unitriangular");
  const Eigen::Index n = a.rows();
  Mat<Scalar> r = Mat<Scalar>::Identity(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Scalar acc(0);
      for (Eigen::Index l = i; l < j; ++l) acc += a(j, l) * r(l, i);
      r(j, i) = -acc;
    }
  }
  return r;
}

}  // namespace nccat
