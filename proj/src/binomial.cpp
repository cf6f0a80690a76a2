#include "nccat/binomial.hpp"

#include <stdexcept>
#include <utility>

#include "nccat/catalan.hpp"
#include "nccat/memo.hpp"

namespace nccat {

namespace {

const NCPoly kZero;

void extend_subsets(unsigned n, unsigned k, unsigned next, Subset& prefix, std::vector<Subset>& out) {
  if (prefix.size() == k) {
    out.push_back(prefix);
    return;
  }
  const auto remaining = k - static_cast<unsigned>(prefix.size());
  for (unsigned j = next; j + remaining - 1 <= n; ++j) {
    prefix.push_back(j);
    extend_subsets(n, k, j + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Subset> k_subsets(unsigned n, unsigned k) {
  std::vector<Subset> out;
  if (k > n) return out;
  Subset prefix;
  extend_subsets(n, k, 1, prefix, out);
  return out;
}

Word y_first(const Subset& j) {
  Word w;
  for (std::size_t s = j.size(); s-- > 0;) w *= y(j[s] + static_cast<unsigned>(s));
  return w;
}

Word y_second(const Subset& j) {
  const auto k = static_cast<int>(j.size());
  Word w;
  for (int s = 1; s <= k; ++s) w *= y(static_cast<std::uint32_t>(static_cast<int>(j[s - 1]) + k + 1 - 2 * s));
  return w;
}

const NCPoly& binom_first(unsigned n, unsigned k) {
  if (k > n) return kZero;
  static MemoTable<std::pair<unsigned, unsigned>, NCPoly> memo;
  return memo.get_or_compute({n, k}, [n, k] {
    TermAccumulator acc;
    for (const auto& j : k_subsets(n, k)) acc.add(y_first(j), 1);
    return std::move(acc).finish();
  });
}

const NCPoly& binom_second(unsigned n, unsigned k) {
  if (k > n) return kZero;
  static MemoTable<std::pair<unsigned, unsigned>, NCPoly> memo;
  return memo.get_or_compute({n, k}, [n, k] {
    TermAccumulator acc;
    for (const auto& j : k_subsets(n, k)) acc.add(y_second(j), 1);
    return std::move(acc).finish();
  });
}

const NCPoly& binom_first_pascal(unsigned n, unsigned k) {
  if (k > n) return kZero;
  static MemoTable<std::pair<unsigned, unsigned>, NCPoly> memo;
  return memo.get_or_compute({n, k}, [n, k] {
    if (k == 0) return NCPoly(1);
    // B(n, k) = B(n-1, k) + y_{n-1+k} B(n-1, k-1)
    return binom_first_pascal(n - 1, k) + y(n - 1 + k) * binom_first_pascal(n - 1, k - 1);
  });
}

const NCPoly& binom_second_pascal(unsigned n, unsigned k) {
  if (k > n) return kZero;
  static MemoTable<std::pair<unsigned, unsigned>, NCPoly> memo;
  return memo.get_or_compute({n, k}, [n, k] {
    if (k == 0) return NCPoly(1);
    return shift(binom_second_pascal(n - 1, k), 1) + y(k) * binom_second_pascal(n - 1, k - 1);
  });
}

std::vector<std::vector<unsigned>> compositions(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  if (k == 0) return out;
  for (unsigned interior = 0; interior < k; ++interior) {
    for (const auto& mid : k_subsets(k - 1, interior)) {
      std::vector<unsigned> j{0};
      j.insert(j.end(), mid.begin(), mid.end());
      j.push_back(k);
      out.push_back(std::move(j));
    }
  }
  return out;
}

namespace {

void check_range(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("requires k <= n");
}

// (-1)^{k+1-|J|}
int composition_sign(unsigned k, std::size_t size) { return (k + 1 - size) % 2 == 0 ? 1 : -1; }

}  // namespace

NCPoly cnk_from_binomials(unsigned n, unsigned k) {
  check_range(n, k);
  if (k == 0) return NCPoly(1);
  TermAccumulator acc;
  for (const auto& j : compositions(k)) {
    NCPoly prod(1);
    for (std::size_t s = j.size() - 1; s >= 1; --s)
      prod *= binom_first(n + j[s - 1] + j[s] - k, j[s] - j[s - 1]);
    acc.add(prod, composition_sign(k, j.size()));
  }
  return std::move(acc).finish();
}

NCPoly binom_from_cnk(unsigned n, unsigned k) {
  check_range(n, k);
  if (k == 0) return NCPoly(1);
  TermAccumulator acc;
  for (const auto& j : compositions(k)) {
    NCPoly prod(1);
    for (std::size_t s = j.size() - 1; s >= 1; --s)
      prod *= truncated_tilde(n + j[s - 1] + j[s] - k, j[s] - j[s - 1]);
    acc.add(prod, composition_sign(k, j.size()));
  }
  return std::move(acc).finish();
}

}  // namespace nccat
