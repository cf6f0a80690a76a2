#include "nccat/hankel.hpp"

#include <stdexcept>

#include "nccat/binomial.hpp"
#include "nccat/catalan.hpp"
#include "nccat/serialize.hpp"

namespace nccat {

namespace {

Eigen::Index dim(unsigned n) { return static_cast<Eigen::Index>(n) + 1; }

NCMatrix zeros(unsigned n) { return NCMatrix::Zero(dim(n), dim(n)); }

void require_known_inverse(unsigned m) {
  if (m > 1) throw std::invalid_argument("explicit Hankel inverses are only available for m in {0, 1}");
}

NCPoly signed_poly(const NCPoly& p, unsigned parity) { return parity % 2 == 0 ? p : -p; }

}  // namespace

NCMatrix hankel(unsigned m, unsigned n) {
  NCMatrix h(dim(n), dim(n));
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) h(i, j) = catalan(m + i + j);
  return h;
}

NCMatrix gauss_L(unsigned m, unsigned n) {
  NCMatrix l = zeros(n);
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned i = 0; i <= j; ++i) l(j, i) = truncated_tilde(i + j + m, j - i);
  return l;
}

NCMatrix gauss_U(unsigned m, unsigned n) {
  NCMatrix u = zeros(n);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j) u(i, j) = bar(truncated(i + j + m, j - i));
  return u;
}

NCMatrix inv_L(unsigned m, unsigned n) {
  NCMatrix l = zeros(n);
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned i = 0; i <= j; ++i) l(j, i) = signed_poly(binom_first(i + j + m, j - i), i + j);
  return l;
}

NCMatrix inv_U(unsigned m, unsigned n) {
  NCMatrix u = zeros(n);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = i; j <= n; ++j)
      u(i, j) = signed_poly(bar(binom_first(i + j + m, j - i)), i + j) * Word::generator(2 * j + m, -1);
  return u;
}

NCMatrix hankel_inverse(unsigned m, unsigned n) {
  require_known_inverse(m);
  return mat_mul(inv_U(m, n), inv_L(m, n));
}

NCPoly quasidet_bordered(unsigned m, unsigned i, unsigned j) {
  require_known_inverse(m);
  if (i > j) throw std::invalid_argument("quasidet_bordered: requires i <= j");
  NCPoly boxed = catalan(m + i + j);
  if (i == 0) return boxed;
  NCMatrix row(1, i);
  NCMatrix col(i, 1);
  for (unsigned c = 0; c < i; ++c) {
    row(0, c) = catalan(m + j + c);
    col(c, 0) = catalan(m + c + i);
  }
  const NCMatrix correction = mat_mul(mat_mul(row, hankel_inverse(m, i - 1)), col);
  return boxed - correction(0, 0);
}

nlohmann::json to_json(const NCMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace nccat
