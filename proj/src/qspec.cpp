#include "nccat/qspec.hpp"

#include <limits>

#include "nccat/memo.hpp"

namespace nccat {

QPoly::Exponent chi_q_exponent(const Word& w) {
  QPoly::Exponent e = 0;
  for (const Letter& l : w.letters()) {
    const auto k = static_cast<QPoly::Exponent>(l.index);
    e += l.exponent * (k * (k - 1) / 2);
  }
  return e;
}

QPoly chi_q(const NCPoly& p) {
  QPoly out;
  for (const auto& [w, c] : p) out += QPoly::monomial(chi_q_exponent(w), c);
  return out;
}

QPoly q_int(unsigned k) {
  QPoly p;
  for (unsigned i = 0; i < k; ++i) p += QPoly::monomial(i);
  return p;
}

QPoly q_factorial(unsigned n) {
  QPoly p(1);
  for (unsigned i = 1; i <= n; ++i) p *= q_int(i);
  return p;
}

QPoly q_binomial(unsigned n, unsigned k) {
  if (k > n) return {};
  return exact_div(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

const QPoly& gh_cnk(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("gh_cnk: requires k <= n");
  static MemoTable<std::pair<unsigned, unsigned>, QPoly> memo;
  return memo.get_or_compute({n, k}, [n, k] {
    if (k == 0) return QPoly(1);
    QPoly sum;
    for (unsigned r = 1; r <= k; ++r) {
      const auto tri = static_cast<QPoly::Exponent>(r) * (r - 1) / 2;
      sum += q_binomial(r + n - k, r).shifted(tri) * gh_cnk(k - 1, k - r);
    }
    return sum;
  });
}

QPoly determinant(const QMatrix& a) {
  QMatrix cleared = a;
  QPoly::Exponent removed = 0;
  for (Eigen::Index r = 0; r < cleared.rows(); ++r) {
    auto low = std::numeric_limits<QPoly::Exponent>::max();
    for (Eigen::Index c = 0; c < cleared.cols(); ++c)
      if (!cleared(r, c).is_zero()) low = std::min(low, cleared(r, c).low_degree());
    if (low == std::numeric_limits<QPoly::Exponent>::max()) return {};
    if (low == 0) continue;
    for (Eigen::Index c = 0; c < cleared.cols(); ++c) cleared(r, c) = cleared(r, c).shifted(-low);
    removed += low;
  }
  return bareiss_determinant(std::move(cleared)).shifted(removed);
}

QPoly q_hankel_det(unsigned m, unsigned n) {
  QMatrix h(n + 1, n + 1);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) h(i, j) = gh_cnk(i + j + m, i + j + m);
  return determinant(h);
}

QPoly q_hankel_det_closed_form(unsigned m, unsigned n) {
  const auto nn = static_cast<QPoly::Exponent>(n);
  const auto mm = static_cast<QPoly::Exponent>(m);
  return QPoly::monomial(nn * (nn + 1) * (4 * nn - 1 + 6 * mm) / 6);
}

}  // namespace nccat
