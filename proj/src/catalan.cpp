#include "nccat/catalan.hpp"

#include <stdexcept>
#include <utility>

#include "nccat/memo.hpp"
#include "nccat/paths.hpp"

namespace nccat {

namespace {

const NCPoly kZero;

void check_oracle_bound(unsigned n) {
  if (n > kOracleMaxN)
    throw std::out_of_range("oracle enumeration is limited to n <= " + std::to_string(kOracleMaxN));
}

}  // namespace

const NCPoly& truncated_tilde(unsigned n, unsigned k) {
  if (k > n) return kZero;
  static MemoTable<std::pair<unsigned, unsigned>, NCPoly> memo;
  return memo.get_or_compute({n, k}, [n, k] {
    if (k == 0) return NCPoly(1);
    NCPoly p = truncated_tilde(n, k - 1) * y(n + 1 - k);
    if (n > 0) p += truncated_tilde(n - 1, k);
    return p;
  });
}

NCPoly truncated(unsigned n, unsigned k) {
  if (k > n) return {};
  return truncated_tilde(n, k) * Word::generator(n - k);
}

const NCPoly& catalan(unsigned n) {
  static MemoTable<unsigned, NCPoly> memo;
  return memo.get_or_compute(n, [n] { return truncated_tilde(n, n) * Word::generator(0); });
}

NCPoly catalan_oracle(unsigned n) {
  check_oracle_bound(n);
  TermAccumulator acc;
  for (const auto& p : enumerate_paths(n)) acc.add(path_monomial(p), 1);
  return std::move(acc).finish();
}

NCPoly tilde_oracle(unsigned n, unsigned k) {
  check_oracle_bound(n);
  TermAccumulator acc;
  for (const auto& j : enumerate_jseq(n, k)) acc.add(jseq_word(j), 1);
  return std::move(acc).finish();
}

const NCPoly& underline_catalan(unsigned n) {
  static MemoTable<unsigned, NCPoly> memo;
  return memo.get_or_compute(n, [n] {
    if (n == 0) return NCPoly(1);
    const Word x0 = Word::generator(0);
    const Word x1 = Word::generator(1);
    NCPoly sum;
    for (unsigned k = 0; k < n; ++k)
      sum += (underline_catalan(k) * x0) * (underline_catalan(n - 1 - k) * x1);
    return sum;
  });
}

const NCPoly& dd_truncated(unsigned n, unsigned k) {
  if (k > n) return kZero;
  static MemoTable<std::pair<unsigned, unsigned>, NCPoly> memo;
  return memo.get_or_compute({n, k}, [n, k] {
    if (k == 0) return NCPoly(Word::generator(0, static_cast<std::int32_t>(n)));
    NCPoly p = dd_truncated(n, k - 1) * Word::generator(1);
    if (n > 0) p += dd_truncated(n - 1, k) * Word::generator(0);
    return p;
  });
}

}  // namespace nccat
