#include "nccat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "nccat/binomial.hpp"
#include "nccat/catalan.hpp"
#include "nccat/hankel.hpp"
#include "nccat/paths.hpp"
#include "nccat/qspec.hpp"
#include "nccat/random.hpp"
#include "nccat/serialize.hpp"

namespace nccat {

long Params::at(std::string_view name) const {
  for (const auto& [k, v] : values)
    if (k == name) return v;
  throw std::out_of_range("missing parameter " + std::string(name));
}

std::string Params::to_string() const {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

nlohmann::json Params::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : values) j[k] = v;
  return j;
}

namespace {

// ---- small helpers -------------------------------------------------------

using Cells = std::vector<Params>;

unsigned u(long v) { return static_cast<unsigned>(v); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer catalan_number(long n) { return binomial(2 * n, n) / (n + 1); }

// binom(n+k, k) - binom(n+k, k-1), extended to all k.
Integer classical_truncated(long n, long k) {
  if (k < 0) return 0;
  return binomial(n + k, k) - binomial(n + k, k - 1);
}

NCPoly signed_poly(const NCPoly& p, long parity) { return parity % 2 == 0 ? p : -p; }

CheckOutcome same(const NCPoly& lhs, const NCPoly& rhs, std::string detail = {}) {
  if (lhs == rhs) return CheckOutcome::pass();
  return CheckOutcome::fail(to_string(lhs), to_string(rhs), std::move(detail));
}

CheckOutcome same(const QPoly& lhs, const QPoly& rhs, std::string detail = {}) {
  if (lhs == rhs) return CheckOutcome::pass();
  return CheckOutcome::fail(to_string(lhs), to_string(rhs), std::move(detail));
}

CheckOutcome same(const Integer& lhs, const Integer& rhs, std::string detail = {}) {
  if (lhs == rhs) return CheckOutcome::pass();
  return CheckOutcome::fail(lhs.get_str(), rhs.get_str(), std::move(detail));
}

CheckOutcome same(const NCMatrix& lhs, const NCMatrix& rhs, std::string detail = {}) {
  if (lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() && lhs == rhs) return CheckOutcome::pass();
  return CheckOutcome::fail(to_json(lhs).dump(), to_json(rhs).dump(), std::move(detail));
}

CheckOutcome all_of(std::initializer_list<std::function<CheckOutcome()>> checks) {
  for (const auto& c : checks) {
    CheckOutcome r = c();
    if (!r.passed) return r;
  }
  return CheckOutcome::pass();
}

Cells range_n(unsigned lo, unsigned hi) {
  Cells out;
  for (unsigned n = lo; n <= hi; ++n) out.push_back({{{"n", n}}});
  return out;
}

// 0 <= k <= n, lo <= n <= hi (k >= k_lo)
Cells range_nk(unsigned lo, unsigned hi, unsigned k_lo = 0) {
  Cells out;
  for (unsigned n = lo; n <= hi; ++n)
    for (unsigned k = k_lo; k <= n; ++k) out.push_back({{{"n", n}, {"k", k}}});
  return out;
}

Cells seeds(unsigned count) {
  Cells out;
  for (unsigned s = 0; s < count; ++s) out.push_back({{{"seed", s}}});
  return out;
}

Cells m01_n(unsigned hi, unsigned lo = 0) {
  Cells out;
  for (unsigned m = 0; m <= 1; ++m)
    for (unsigned n = lo; n <= hi; ++n) out.push_back({{{"m", m}, {"n", n}}});
  return out;
}

std::mt19937_64 rng_for(const Params& p) {
  return std::mt19937_64(0x5eedULL + 7919ULL * static_cast<std::uint64_t>(p.at("seed")));
}

RandomShape shape_for(unsigned max_n) {
  RandomShape s;
  s.max_index = std::max(1u, max_n);
  s.max_letters = std::max<std::size_t>(2, max_n);
  return s;
}

const Word kX0 = Word::generator(0);
const Word kX1 = Word::generator(1);
const Word kX0Inv = Word::generator(0, -1);
const Word kX1Inv = Word::generator(1, -1);

// ---- word ring ----------------------------------------------------------

CheckOutcome homomorphism(const Params& p, unsigned max_n,
                          const std::function<NCPoly(const NCPoly&)>& f) {
  auto rng = rng_for(p);
  RandomShape shape = shape_for(max_n);
  shape.max_letters = std::min<std::size_t>(shape.max_letters, 4);
  const NCPoly a = random_poly(rng, shape);
  const NCPoly b = random_poly(rng, shape);
  return all_of({[&] { return same(f(a + b), f(a) + f(b), "additivity"); },
                 [&] { return same(f(a * b), f(a) * f(b), "multiplicativity"); },
                 [&] { return same(f(NCPoly(1)), NCPoly(1), "unit"); }});
}

void add_word_ring(std::vector<IdentityDescriptor>& reg) {
  reg.push_back({"word-associativity", "free reduction is confluent", "50 random triples, index and length <= 6", 6,
                 [](unsigned) { return seeds(50); },
                 [](const Params& p) {
                   auto rng = rng_for(p);
                   const RandomShape shape = shape_for(6);
                   const Word a = random_word(rng, shape);
                   const Word b = random_word(rng, shape);
                   const Word c = random_word(rng, shape);
                   if ((a * b) * c != a * (b * c))
                     return CheckOutcome::fail(to_string((a * b) * c), to_string(a * (b * c)), "associativity");
                   if (a * Word{} != a || Word{} * a != a || !(a * a.inverse()).empty())
                     return CheckOutcome::fail(to_string(a), "", "identity/inverse");
                   return CheckOutcome::pass();
                 }});
  reg.push_back({"bar-anti-automorphism", "bar is an involutive anti-automorphism", "50 random pairs", 6,
                 [](unsigned) { return seeds(50); },
                 [](const Params& p) {
                   auto rng = rng_for(p);
                   const RandomShape shape = shape_for(6);
                   const NCPoly a = random_poly(rng, shape);
                   const NCPoly b = random_poly(rng, shape);
                   return all_of({[&] { return same(bar(bar(a)), a, "involution"); },
                                  [&] { return same(bar(a * b), bar(b) * bar(a), "anti-multiplicative"); },
                                  [&] { return same(bar(a + b), bar(a) + bar(b), "additive"); }});
                 }});
  reg.push_back({"eps-homomorphism", "counit x_k -> 1 is a ring map", "50 random pairs", 6,
                 [](unsigned) { return seeds(50); },
                 [](const Params& p) {
                   auto rng = rng_for(p);
                   const NCPoly a = random_poly(rng, shape_for(6));
                   const NCPoly b = random_poly(rng, shape_for(6));
                   return all_of({[&] { return same(eps(a + b), Integer(eps(a) + eps(b)), "additivity"); },
                                  [&] { return same(eps(a * b), Integer(eps(a) * eps(b)), "multiplicativity"); }});
                 }});
  reg.push_back({"sigma-homomorphism", "sigma(x_k) = x0^k x1^k", "50 random pairs, index <= 6", 6,
                 [](unsigned) { return seeds(50); },
                 [](const Params& p) { return homomorphism(p, 6, [](const NCPoly& q) { return sigma(q); }); }});
  reg.push_back({"pi-homomorphism", "pi(x_k) = x0 (x0^{-1} x1)^k", "50 random pairs, index <= 6", 6,
                 [](unsigned) { return seeds(50); },
                 [](const Params& p) { return homomorphism(p, 6, [](const NCPoly& q) { return pi(q); }); }});
  reg.push_back({"shift-homomorphism", "T(x_k) = x_{k+1}", "50 random pairs; shift by 0..3", 6,
                 [](unsigned) { return seeds(50); },
                 [](const Params& p) {
                   const auto r = static_cast<std::uint32_t>(p.at("seed") % 4);
                   auto out = homomorphism(p, 6, [r](const NCPoly& q) { return shift(q, r); });
                   if (!out.passed) return out;
                   auto rng = rng_for(p);
                   const NCPoly a = random_poly(rng, shape_for(6));
                   return same(shift(shift(a, r), 2), shift(a, r + 2), "T^a T^b = T^{a+b}");
                 }});
  reg.push_back({"sigma-shift", "sigma(T(x)) = x0 sigma(x) x1 on alternating x",
                 "500 random alternating combinations", 6, [](unsigned) { return seeds(500); },
                 [](const Params& p) {
                   auto rng = rng_for(p);
                   const NCPoly a = random_alternating_poly(rng, 6, 7, 4);
                   return same(sigma(shift(a, 1)), kX0 * sigma(a) * kX1);
                 }});
  reg.push_back({"pi-catalan", "pi(C_n) = pi(x_n) * Catalan(n)", "0 <= n <= N", 10,
                 [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   return same(pi(catalan(n)), NCPoly(pi(Word::generator(n)), catalan_number(n)));
                 }});
}

// ---- catalan core -------------------------------------------------------

void add_catalan_core(std::vector<IdentityDescriptor>& reg) {
  reg.push_back({"catalan-structure", "C_n has Catalan(n) distinct monomials, all with coefficient 1",
                 "0 <= n <= N", 10, [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const NCPoly& c = catalan(n);
                   const bool unit = std::all_of(c.begin(), c.end(), [](const auto& t) { return t.second == 1; });
                   if (!unit) return CheckOutcome::fail(to_string(c), "", "coefficient other than 1");
                   return all_of({[&] { return same(Integer(c.size()), catalan_number(n), "term count"); },
                                  [&] { return same(eps(c), catalan_number(n), "eps"); }});
                 }});
  reg.push_back({"bar-invariance", "bar(C_n) = C_n", "0 <= n <= N", 10,
                 [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const NCPoly& c = catalan(u(p.at("n")));
                   return same(bar(c), c);
                 }});
  reg.push_back({"path-reflection", "bar(M_P) = M_{s_n(P)} for every Catalan path", "0 <= n <= N", 8,
                 [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   for (const auto& path : enumerate_paths(u(p.at("n")))) {
                     const LatticePath r = path_reflect(path);
                     if (!r.is_catalan() || path_reflect(r) != path)
                       return CheckOutcome::fail(to_string(path), to_string(r), "reflection not an involution on P_n");
                     if (bar(path_monomial(path)) != path_monomial(r))
                       return CheckOutcome::fail(to_string(bar(path_monomial(path))), to_string(path_monomial(r)),
                                                 "path " + to_string(path));
                   }
                   return CheckOutcome::pass();
                 }});
  reg.push_back({"catalan-oracle", "C_n equals the sum of M_P over Catalan paths", "0 <= n <= N", 8,
                 [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   return same(catalan(n), catalan_oracle(n));
                 }});
  reg.push_back({"tilde-oracle", "C~_n^k equals the J-sequence sum of y_{j1} y_{j2-1} ... y_{jk-k+1}",
                 "0 <= k <= n <= N", 8, [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return same(truncated_tilde(n, k), tilde_oracle(n, k));
                 }});
  reg.push_back({"path-jseq-bijection", "P -> j(P) is a bijection P_n^k -> J_n^k with M_P x_{n-k}^{-1} = y_j(P)",
                 "0 <= k <= n <= N", 7, [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   const auto paths = enumerate_paths(n, k);
                   auto expected = enumerate_jseq(n, k);
                   std::vector<std::vector<unsigned>> images;
                   for (const auto& path : paths) {
                     const JSeq j = path_to_jseq(path, k);
                     images.push_back(j.entries);
                     const Word lhs = path_monomial(path) * Word::generator(n - k, -1);
                     if (lhs != jseq_word(j))
                       return CheckOutcome::fail(to_string(lhs), to_string(jseq_word(j)), "path " + to_string(path));
                   }
                   std::vector<std::vector<unsigned>> want;
                   for (const auto& j : expected) want.push_back(j.entries);
                   std::sort(images.begin(), images.end());
                   if (images != want)
                     return CheckOutcome::fail(std::to_string(images.size()), std::to_string(want.size()),
                                               "image of P_n^k differs from J_n^k");
                   return CheckOutcome::pass();
                 }});
  reg.push_back({"recursion-c", "C_{n+1} = sum C_k x0^-1 T(C_{n-k}) = sum T(C_k) x0^-1 C_{n-k}",
                 "0 <= n <= N", 10, [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   NCPoly left;
                   NCPoly right;
                   for (unsigned k = 0; k <= n; ++k) {
                     left += catalan(k) * kX0Inv * shift(catalan(n - k), 1);
                     right += shift(catalan(k), 1) * kX0Inv * catalan(n - k);
                   }
                   return all_of({[&] { return same(catalan(n + 1), left, "first form"); },
                                  [&] { return same(catalan(n + 1), right, "second form"); }});
                 }});
  reg.push_back({"recursion-t2", "C_{n+1} = C_n x0^-1 x1 + sum_{k>=1} C_k x1^-1 T^2(C_{n-k}), and its mirror", "1 <= n <= N", 9,
                 [](unsigned max_n) { return range_n(1, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   NCPoly left = catalan(n) * kX0Inv * kX1;
                   NCPoly right = kX1 * kX0Inv * catalan(n);
                   for (unsigned k = 1; k <= n; ++k) left += catalan(k) * kX1Inv * shift(catalan(n - k), 2);
                   for (unsigned k = 0; k < n; ++k) right += shift(catalan(k), 2) * kX1Inv * catalan(n - k);
                   return all_of({[&] { return same(catalan(n + 1), left, "first form"); },
                                  [&] { return same(catalan(n + 1), right, "mirrored form"); }});
                 }});
  reg.push_back({"catalan-series", "C(t) = x0 + t C(t) x0^-1 T(C(t)) and T(C) x0^-1 C = C x0^-1 T(C)",
                 "coefficient of t^N' for 0 <= N' <= N", 10, [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned deg = u(p.at("n"));
                   NCPoly rhs = deg == 0 ? NCPoly(kX0) : NCPoly();
                   for (unsigned k = 0; deg > 0 && k < deg; ++k)
                     rhs += catalan(k) * kX0Inv * shift(catalan(deg - 1 - k), 1);
                   NCPoly comm_left;
                   NCPoly comm_right;
                   for (unsigned k = 0; k <= deg; ++k) {
                     comm_left += shift(catalan(k), 1) * kX0Inv * catalan(deg - k);
                     comm_right += catalan(k) * kX0Inv * shift(catalan(deg - k), 1);
                   }
                   return all_of({[&] { return same(catalan(deg), rhs, "functional equation"); },
                                  [&] { return same(comm_left, comm_right, "commutation"); }});
                 }});
  reg.push_back({"truncated-lemma", "C_n^k = C_n^{k-1} + C_{n-1}^k x_{n-k-1}^-1 x_{n-k}", "1 <= k <= n <= N", 10,
                 [](unsigned max_n) { return range_nk(1, max_n, 1); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly rhs = truncated(n, k - 1);
                   // C_{n-1}^n = 0, so the second term only exists for k < n.
                   if (k < n) rhs += truncated(n - 1, k) * Word{{n - k - 1, -1}, {n - k, 1}};
                   return same(truncated(n, k), rhs);
                 }});
  reg.push_back({"recursion-cnk-b", "on J-sequence sums: C~_n^k = C~_{n-1}^k + C~_n^{k-1} y_{n+1-k}",
                 "1 <= k <= n <= N", 9, [](unsigned max_n) { return range_nk(1, max_n, 1); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly rhs = tilde_oracle(n, k - 1) * y(n + 1 - k);
                   if (k <= n - 1) rhs += tilde_oracle(n - 1, k);
                   return same(tilde_oracle(n, k), rhs);
                 }});
  reg.push_back({"recursion-cnk-c", "C~_{n+1}^k = sum_i C~_i^i T(C~_{n-i}^{k-i})",
                 "0 <= k <= n <= N", 9, [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly rhs;
                   for (unsigned i = 0; i <= k; ++i)
                     rhs += truncated_tilde(i, i) * shift(truncated_tilde(n - i, k - i), 1);
                   return same(truncated_tilde(n + 1, k), rhs);
                 }});
  reg.push_back({"catalan-via-truncated",
                 "C_n = sum_{a-b=d} C_{n-b}^a x_{n-a-b}^-1 bar(C_{n-a}^b)",
                 "0 <= n <= N, |d| <= n", 8,
                 [](unsigned max_n) {
                   Cells out;
                   for (long n = 0; n <= static_cast<long>(max_n); ++n)
                     for (long d = -n; d <= n; ++d) out.push_back({{{"n", n}, {"d", d}}});
                   return out;
                 },
                 [](const Params& p) {
                   const long n = p.at("n");
                   const long d = p.at("d");
                   NCPoly sum;
                   for (long b = 0; b <= n; ++b) {
                     const long a = b + d;
                     if (a < 0 || a + b > n) continue;
                     sum += truncated(u(n - b), u(a)) * Word::generator(u(n - a - b), -1) *
                            bar(truncated(u(n - a), u(b)));
                   }
                   return same(catalan(u(n)), sum);
                 }});
  reg.push_back({"underline-sigma", "underline C_n (two-letter recursion) equals sigma(C_n)", "0 <= n <= N", 10,
                 [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   return same(underline_catalan(n), sigma(catalan(n)));
                 }});
  reg.push_back({"underline-recursion",
                 "on sigma(C_k): sum C_k x0 C_{n-k} x1 = sum x0 C_k x1 C_{n-k}",
                 "0 <= n <= N", 10, [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   NCPoly left;
                   NCPoly right;
                   for (unsigned k = 0; k <= n; ++k) {
                     const NCPoly a = sigma(catalan(k));
                     const NCPoly b = sigma(catalan(n - k));
                     left += a * kX0 * b * kX1;
                     right += kX0 * a * kX1 * b;
                   }
                   const NCPoly target = sigma(catalan(n + 1));
                   return all_of({[&] { return same(target, left, "first form"); },
                                  [&] { return same(target, right, "second form"); }});
                 }});
  reg.push_back({"underline-t2", "sigma image of the T^2 recursion, both forms", "1 <= n <= N", 9,
                 [](unsigned max_n) { return range_n(1, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   NCPoly left = underline_catalan(n) * kX0 * kX1;
                   NCPoly right = kX0 * kX1 * underline_catalan(n);
                   for (unsigned k = 1; k <= n; ++k)
                     left += underline_catalan(k) * kX1Inv * kX0 * underline_catalan(n - k) * Word{{1, 2}};
                   for (unsigned k = 0; k < n; ++k)
                     right += Word{{0, 2}} * underline_catalan(k) * kX1 * kX0Inv * underline_catalan(n - k);
                   return all_of({[&] { return same(underline_catalan(n + 1), left, "first form"); },
                                  [&] { return same(underline_catalan(n + 1), right, "mirrored form"); }});
                 }});
  reg.push_back({"underline-structure", "underline C_n: Catalan(n) positive monomials, coefficients 1",
                 "0 <= n <= N", 10, [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const NCPoly& c = underline_catalan(n);
                   for (const auto& [w, coeff] : c) {
                     const bool positive = std::all_of(w.letters().begin(), w.letters().end(),
                                                       [](const Letter& l) { return l.exponent > 0 && l.index <= 1; });
                     if (coeff != 1 || !positive)
                       return CheckOutcome::fail(to_string(w), "", "non-monomial or non-positive term");
                   }
                   return same(Integer(c.size()), catalan_number(n), "term count");
                 }});
  reg.push_back({"underline-paths", "underline C_n equals the sum of jump monomials over Catalan paths",
                 "0 <= n <= N", 8, [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   TermAccumulator acc;
                   for (const auto& path : enumerate_paths(n)) acc.add(jump_monomial(path), 1);
                   return same(underline_catalan(n), std::move(acc).finish());
                 }});
  reg.push_back({"dd-truncated", "double-underline C_n^k (Pascal-like recursion) equals sigma(C_n^k) x1^{k-n}",
                 "0 <= k <= n <= N", 8, [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   const NCPoly& dd = dd_truncated(n, k);
                   for (const auto& [w, c] : dd) {
                     if (w.degree() != static_cast<std::int64_t>(n + k))
                       return CheckOutcome::fail(to_string(w), std::to_string(n + k), "degree");
                   }
                   return same(dd, sigma(truncated(n, k)) * Word::generator(1, static_cast<std::int32_t>(k) -
                                                                                    static_cast<std::int32_t>(n)));
                 }});
  reg.push_back({"classical-eps", "eps recovers Catalan numbers, c_n^k and the classical identities",
                 "n <= N (and m + n <= N)", 10, [](unsigned max_n) { return range_n(0, max_n); },
                 [](const Params& p) {
                   const long n = p.at("n");
                   if (auto r = same(eps(catalan(u(n))), catalan_number(n), "eps(C_n)"); !r.passed) return r;
                   for (long k = 0; k <= n; ++k) {
                     if (auto r = same(eps(truncated(u(n), u(k))), classical_truncated(n, k), "eps(C_n^k)"); !r.passed)
                       return r;
                   }
                   // c_n = sum_{a+b<=n, a-b=d} c_{n-b}^a c_{n-a}^b for every |d| <= n
                   for (long d = -n; d <= n; ++d) {
                     Integer s = 0;
                     for (long b = 0; b <= n; ++b) {
                       const long a = b + d;
                       if (a >= 0 && a + b <= n) s += classical_truncated(n - b, a) * classical_truncated(n - a, b);
                     }
                     if (auto r = same(s, catalan_number(n), "truncated sum, d=" + std::to_string(d)); !r.passed) return r;
                   }
                   for (long k = 0; k <= n; ++k) {
                     Integer s = 0;
                     for (long j = 0; j <= k; ++j) s += catalan_number(j) * classical_truncated(n - j, k - j);
                     if (auto r = same(s, classical_truncated(n + 1, k), "c_{n+1}^k, k=" + std::to_string(k)); !r.passed)
                       return r;
                   }
                   for (long k = 1; k <= n; ++k) {
                     Integer s = 0;
                     for (long j = 0; j <= k; ++j) {
                       Integer t = classical_truncated(n + k - j, j) * binomial(n - j, k - j);
                       s += j % 2 == 0 ? t : Integer(-t);
                     }
                     if (auto r = same(s, Integer(0), "alternating sum, k=" + std::to_string(k)); !r.passed) return r;
                   }
                   // c_{m+n'}^k = sum_l c_{m+l}^{k-l} binom(n', l) with m + n' = n
                   for (long m = 0; m <= n; ++m) {
                     const long np = n - m;
                     for (long k = 0; k <= n; ++k) {
                       Integer s = 0;
                       for (long l = 0; l <= np; ++l) s += classical_truncated(m + l, k - l) * binomial(np, l);
                       if (auto r = same(s, classical_truncated(n, k),
                                         "multiplication law m=" + std::to_string(m) + " k=" + std::to_string(k));
                           !r.passed)
                         return r;
                     }
                   }
                   return CheckOutcome::pass();
                 }});
}

// ---- binomials ----------------------------------------------------------

Cells range_mnk(unsigned max_sum, bool k_to_sum) {
  Cells out;
  for (unsigned m = 0; m <= max_sum; ++m)
    for (unsigned n = 0; m + n <= max_sum; ++n)
      for (unsigned k = 0; k <= (k_to_sum ? m + n : std::min(m + 1, m + n)); ++k)
        out.push_back({{{"m", m}, {"n", n}, {"k", k}}});
  return out;
}

void add_binomials(std::vector<IdentityDescriptor>& reg) {
  reg.push_back({"binom-eps", "eps(B(n,k)) = eps(B'(n,k)) = binom(n,k)", "0 <= k <= n <= N", 12,
                 [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return all_of({[&] { return same(eps(binom_first(n, k)), binomial(n, k), "first kind"); },
                                  [&] { return same(eps(binom_second(n, k)), binomial(n, k), "second kind"); }});
                 }});
  reg.push_back({"binom-builders", "subset enumeration and the Pascal-rule builders agree", "0 <= k <= n <= N", 10,
                 [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return all_of({[&] { return same(binom_first(n, k), binom_first_pascal(n, k), "first kind"); },
                                  [&] { return same(binom_second(n, k), binom_second_pascal(n, k), "second kind"); }});
                 }});
  reg.push_back({"binom-pascal", "Pascal rules B(n+1,k) = B(n,k) + y_{n+k} B(n,k-1), B'(n+1,k) = T(B'(n,k)) + y_k B'(n,k-1)",
                 "0 <= n <= N, 0 <= k <= n+1", 10,
                 [](unsigned max_n) {
                   Cells out;
                   for (unsigned n = 0; n <= max_n; ++n)
                     for (unsigned k = 0; k <= n + 1; ++k) out.push_back({{{"n", n}, {"k", k}}});
                   return out;
                 },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly first = binom_first(n, k);
                   NCPoly second = shift(binom_second(n, k), 1);
                   if (k >= 1) {
                     first += y(n + k) * binom_first(n, k - 1);
                     second += y(k) * binom_second(n, k - 1);
                   }
                   return all_of({[&] { return same(binom_first(n + 1, k), first, "first kind"); },
                                  [&] { return same(binom_second(n + 1, k), second, "second kind"); }});
                 }});
  reg.push_back({"binom-mult-first", "B(m+n,k) = sum_{a+b=k} T^{n+b}(B(m,a)) B(n,b)",
                 "m + n <= N, 0 <= k <= m + n", 10, [](unsigned max_n) { return range_mnk(max_n, true); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly sum;
                   for (unsigned a = 0; a <= k; ++a) {
                     const unsigned b = k - a;
                     sum += shift(binom_first(m, a), n + b) * binom_first(n, b);
                   }
                   return same(binom_first(m + n, k), sum);
                 }});
  reg.push_back({"binom-mult-second", "B'(m+n,k) = sum_{a+b=k} T^b(B'(m,a)) T^{m-a}(B'(n,b))",
                 "m + n <= N, 0 <= k <= m + n", 10, [](unsigned max_n) { return range_mnk(max_n, true); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly sum;
                   for (unsigned a = 0; a <= std::min(k, m); ++a) {
                     const unsigned b = k - a;
                     sum += shift(binom_second(m, a), b) * shift(binom_second(n, b), m - a);
                   }
                   return same(binom_second(m + n, k), sum);
                 }});
  reg.push_back({"mult-truncated-catalan",
                 "C~_{m+n}^k = sum_l C~_{m+l}^{k-l} T^{m-k+l}(B'(n,l))",
                 "m + n <= N, 0 <= k <= min(m+1, m+n) (the summands are defined in ZF only there)", 10,
                 [](unsigned max_n) { return range_mnk(max_n, false); },
                 [](const Params& p) {
                   const long m = p.at("m");
                   const long n = p.at("n");
                   const long k = p.at("k");
                   NCPoly sum;
                   for (long l = 0; l <= std::min(n, k); ++l) {
                     const NCPoly& left = truncated_tilde(u(m + l), u(k - l));
                     if (left.is_zero()) continue;
                     sum += left * shift(binom_second(u(n), u(l)), u(m - k + l));
                   }
                   return same(truncated_tilde(u(m + n), u(k)), sum);
                 }});
  reg.push_back({"alternating-recursion", "sum_j (-1)^j C~_{n+k-j}^j B(n-j,k-j) = 0",
                 "0 < k <= n <= N", 8, [](unsigned max_n) { return range_nk(1, max_n, 1); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly sum;
                   for (unsigned j = 0; j <= k; ++j)
                     sum += signed_poly(truncated_tilde(n + k - j, j) * binom_first(n - j, k - j), j);
                   return same(sum, NCPoly());
                 }});
  reg.push_back({"alternating-companion", "Companion identity: sum_j (-1)^j B(n+k-j,j) C~_{n-j}^{k-j} = 0",
                 "0 < k <= n <= N", 8, [](unsigned max_n) { return range_nk(1, max_n, 1); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   NCPoly sum;
                   for (unsigned j = 0; j <= k; ++j)
                     sum += signed_poly(binom_first(n + k - j, j) * truncated_tilde(n - j, k - j), j);
                   return same(sum, NCPoly());
                 }});
  reg.push_back({"cnk-via-binomials", "C~_n^k = sum_J (-1)^{k+1-|J|} B(n+j_{l-1}+j_l-k, j_l-j_{l-1}) ... B(n+j0+j1-k, j1-j0)", "0 <= k <= n <= N", 7,
                 [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return same(truncated_tilde(n, k), cnk_from_binomials(n, k));
                 }});
  reg.push_back({"binom-via-cnk", "B(n,k) = sum_J (-1)^{k+1-|J|} C~ products, largest offsets on the left", "0 <= k <= n <= N", 7,
                 [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return same(binom_first(n, k), binom_from_cnk(n, k));
                 }});
  reg.push_back({"binom-chi-q", "chi_q(B(n,k)) = q^{k(k-1)} [n k]_q, chi_q(B'(n,k)) = q^{k(k-1)/2} [n k]_q",
                 "0 <= k <= n <= N", 10, [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   const QPoly qb = q_binomial(n, k);
                   const auto kk = static_cast<QPoly::Exponent>(k) * (static_cast<QPoly::Exponent>(k) - 1);
                   return all_of({[&] { return same(chi_q(binom_first(n, k)), qb.shifted(kk), "first kind"); },
                                  [&] { return same(chi_q(binom_second(n, k)), qb.shifted(kk / 2), "second kind"); }});
                 }});
}

// ---- Hankel matrices ----------------------------------------------------

void add_hankel(std::vector<IdentityDescriptor>& reg) {
  reg.push_back({"gauss-factorization", "H_m^n = L_m U_m", "m in {0,1}, 0 <= n <= N", 5,
                 [](unsigned max_n) { return m01_n(max_n); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   return same(hankel(m, n), mat_mul(gauss_L(m, n), gauss_U(m, n)));
                 }});
  reg.push_back({"gauss-entrywise",
                 "(L U)_{ij} = sum_k C_{i+k+m}^{i-k} x_{2k+m}^-1 bar(C_{k+j+m}^{j-k}) = C_{m+i+j}",
                 "m in {0,1}, 0 <= i, j <= N", 5,
                 [](unsigned max_n) {
                   Cells out;
                   for (unsigned m = 0; m <= 1; ++m)
                     for (unsigned i = 0; i <= max_n; ++i)
                       for (unsigned j = 0; j <= max_n; ++j) out.push_back({{{"m", m}, {"i", i}, {"j", j}}});
                   return out;
                 },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned i = u(p.at("i"));
                   const unsigned j = u(p.at("j"));
                   NCPoly sum;
                   for (unsigned k = 0; k <= std::min(i, j); ++k)
                     sum += truncated(i + k + m, i - k) * Word::generator(2 * k + m, -1) *
                            bar(truncated(k + j + m, j - k));
                   return same(catalan(m + i + j), sum);
                 }});
  reg.push_back({"inverse-gauss-l", "L_m L_m^- = L_m^- L_m = I", "m in {0,1}, 0 <= n <= N", 5,
                 [](unsigned max_n) { return m01_n(max_n); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   const NCMatrix l = gauss_L(m, n);
                   const NCMatrix li = inv_L(m, n);
                   const NCMatrix id = mat_identity<NCPoly>(n + 1);
                   return all_of({[&] { return same(mat_mul(l, li), id, "L L^-"); },
                                  [&] { return same(mat_mul(li, l), id, "L^- L"); }});
                 }});
  reg.push_back({"inverse-gauss-u", "U_m U_m^- = U_m^- U_m = I", "m in {0,1}, 0 <= n <= N", 5,
                 [](unsigned max_n) { return m01_n(max_n); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   const NCMatrix up = gauss_U(m, n);
                   const NCMatrix ui = inv_U(m, n);
                   const NCMatrix id = mat_identity<NCPoly>(n + 1);
                   return all_of({[&] { return same(mat_mul(up, ui), id, "U U^-"); },
                                  [&] { return same(mat_mul(ui, up), id, "U^- U"); }});
                 }});
  reg.push_back({"hankel-inverse", "H (U^- L^-) = (U^- L^-) H = I", "m in {0,1}, 0 <= n <= N",
                 4, [](unsigned max_n) { return m01_n(max_n); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   const NCMatrix h = hankel(m, n);
                   const NCMatrix hi = hankel_inverse(m, n);
                   const NCMatrix id = mat_identity<NCPoly>(n + 1);
                   return all_of({[&] { return same(mat_mul(h, hi), id, "H H^-1"); },
                                  [&] { return same(mat_mul(hi, h), id, "H^-1 H"); }});
                 }});
  reg.push_back({"unitriangular-inverse", "lower unitriangular inverse of L_m equals L_m^-", "m in {0,1}, 0 <= n <= N",
                 4, [](unsigned max_n) { return m01_n(max_n); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   return all_of({[&] { return same(invert_unitriangular(gauss_L(m, n)), inv_L(m, n), "inv(L)"); },
                                  [&] { return same(invert_unitriangular(inv_L(m, n)), gauss_L(m, n), "inv(L^-)"); }});
                 }});
  reg.push_back({"quasidet-bordered", "bordered quasideterminant equals C_{m+i+j}^{j-i}",
                 "m in {0,1}, 0 <= i <= j, m + i + j <= N", 8,
                 [](unsigned max_n) {
                   Cells out;
                   for (unsigned m = 0; m <= 1; ++m)
                     for (unsigned i = 0; m + 2 * i <= max_n; ++i)
                       for (unsigned j = i; m + i + j <= max_n; ++j) out.push_back({{{"m", m}, {"i", i}, {"j", j}}});
                   return out;
                 },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned i = u(p.at("i"));
                   const unsigned j = u(p.at("j"));
                   return same(quasidet_bordered(m, i, j), truncated(m + i + j, j - i));
                 }});
  reg.push_back({"principal-quasiminor", "principal Hankel quasiminor equals x_{m+2n}", "m in {0,1}, 0 <= n <= N", 4,
                 [](unsigned max_n) { return m01_n(max_n); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   return same(quasidet_bordered(m, n, n), x(m + 2 * n));
                 }});
}

// ---- q-specialization ---------------------------------------------------

void add_qspec(std::vector<IdentityDescriptor>& reg) {
  reg.push_back({"chi-q-homomorphism", "chi_q is a ring map", "50 random pairs", 6, [](unsigned) { return seeds(50); },
                 [](const Params& p) {
                   auto rng = rng_for(p);
                   const NCPoly a = random_poly(rng, shape_for(6));
                   const NCPoly b = random_poly(rng, shape_for(6));
                   return all_of({[&] { return same(chi_q(a + b), chi_q(a) + chi_q(b), "additivity"); },
                                  [&] { return same(chi_q(a * b), chi_q(a) * chi_q(b), "multiplicativity"); },
                                  [&] { return same(chi_q(a).at_one(), eps(a), "value at q = 1"); }});
                 }});
  reg.push_back({"chi-q-shift", "chi_q(T(y)) = q^d chi_q(y) for y-homogeneous y of degree d (B(n,k), C~_n^k)",
                 "0 <= k <= n <= N", 10, [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return all_of({[&] {
                                    const NCPoly& b = binom_first(n, k);
                                    return same(chi_q(shift(b, 1)), chi_q(b).shifted(k), "B(n,k)");
                                  },
                                  [&] {
                                    const NCPoly& c = truncated_tilde(n, k);
                                    return same(chi_q(shift(c, 1)), chi_q(c).shifted(k), "C~_n^k");
                                  }});
                 }});
  reg.push_back({"det-gh", "chi_q(C~_n^k) = c_n^k(q,1)", "0 <= k <= n <= N", 10,
                 [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return same(chi_q(truncated_tilde(n, k)), gh_cnk(n, k));
                 }});
  reg.push_back({"gh-hankel-det", "det(c_{i+j+m}(q,1)) = q^{n(n+1)(4n-1+6m)/6}",
                 "m in {0,1}, 1 <= n <= N", 6, [](unsigned max_n) { return m01_n(max_n, 1); },
                 [](const Params& p) {
                   const unsigned m = u(p.at("m"));
                   const unsigned n = u(p.at("n"));
                   return same(q_hankel_det(m, n), q_hankel_det_closed_form(m, n));
                 }});
  reg.push_back({"chi-q-eps", "chi_q(p) at q = 1 equals eps(p)", "0 <= k <= n <= N", 10,
                 [](unsigned max_n) { return range_nk(0, max_n); },
                 [](const Params& p) {
                   const unsigned n = u(p.at("n"));
                   const unsigned k = u(p.at("k"));
                   return all_of({[&] { return same(chi_q(catalan(n)).at_one(), eps(catalan(n)), "C_n"); },
                                  [&] { return same(chi_q(truncated(n, k)).at_one(), eps(truncated(n, k)), "C_n^k"); },
                                  [&] {
                                    return same(chi_q(binom_second(n, k)).at_one(), eps(binom_second(n, k)), "B'(n,k)");
                                  }});
                 }});
}

void set_cap(std::vector<IdentityDescriptor>& reg, std::string_view id, unsigned cap) {
  for (auto& d : reg)
    if (d.id == id) d.cap = cap;
}

std::vector<IdentityDescriptor> build_registry() {
  std::vector<IdentityDescriptor> reg;
  add_word_ring(reg);
  add_catalan_core(reg);
  add_binomials(reg);
  add_hankel(reg);
  add_qspec(reg);
  // Entries of H^{-1} H at n = 5 multiply polynomials with ~6e4 and ~2e3 terms.
  set_cap(reg, "hankel-inverse", 4);
  set_cap(reg, "principal-quasiminor", 4);
  for (const char* id : {"gauss-factorization", "gauss-entrywise", "inverse-gauss-l", "inverse-gauss-u",
                         "unitriangular-inverse"})
    set_cap(reg, id, 5);
  // The path and J-sequence oracles refuse n > kOracleMaxN.
  for (const char* id : {"catalan-oracle", "tilde-oracle", "recursion-cnk-b"}) set_cap(reg, id, kOracleMaxN);
  std::sort(reg.begin(), reg.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return reg;
}

struct Job {
  std::size_t identity;
  std::size_t cell;
};

}  // namespace

const std::vector<IdentityDescriptor>& identity_registry() {
  static const std::vector<IdentityDescriptor> reg = build_registry();
  return reg;
}

const IdentityDescriptor* find_identity(std::string_view id) {
  for (const auto& d : identity_registry())
    if (d.id == id) return &d;
  return nullptr;
}

namespace {

std::vector<IdentityReport> run_descriptors(const std::vector<const IdentityDescriptor*>& selected,
                                            std::optional<unsigned> max_n, unsigned jobs) {
  std::vector<std::vector<Params>> cells;
  std::vector<unsigned> bounds;
  std::vector<Job> work;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    bounds.push_back(std::min(max_n.value_or(selected[i]->default_max_n), selected[i]->cap));
    cells.push_back(selected[i]->cells(bounds.back()));
    for (std::size_t c = 0; c < cells.back().size(); ++c) work.push_back({i, c});
  }

  std::vector<CheckOutcome> outcomes(work.size());
  std::vector<double> millis(work.size(), 0.0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w = next++; w < work.size(); w = next++) {
      const auto& job = work[w];
      const auto start = std::chrono::steady_clock::now();
      try {
        outcomes[w] = selected[job.identity]->check(cells[job.identity][job.cell]);
      } catch (const std::exception& e) {
        outcomes[w] = CheckOutcome::fail("", "", std::string("exception: ") + e.what());
      }
      millis[w] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned threads = std::max(1u, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<IdentityReport> reports;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    IdentityReport r;
    r.id = selected[i]->id;
    r.reference = selected[i]->reference;
    r.range = selected[i]->range;
    r.max_n = bounds[i];
    r.cells = cells[i].size();
    reports.push_back(std::move(r));
  }
  for (std::size_t w = 0; w < work.size(); ++w) {
    IdentityReport& r = reports[work[w].identity];
    r.millis += millis[w];
    if (!outcomes[w].passed && r.passed) {
      r.passed = false;
      r.failing = cells[work[w].identity][work[w].cell];
      r.lhs = outcomes[w].lhs;
      r.rhs = outcomes[w].rhs;
      r.detail = outcomes[w].detail;
    }
  }
  return reports;
}

}  // namespace

std::vector<IdentityReport> run_suite(std::string_view suite, std::optional<unsigned> max_n, unsigned jobs) {
  std::vector<const IdentityDescriptor*> selected;
  if (suite == "all") {
    for (const auto& d : identity_registry()) selected.push_back(&d);
  } else if (const auto* d = find_identity(suite)) {
    selected.push_back(d);
  } else {
    throw std::invalid_argument("unknown suite id: " + std::string(suite));
  }
  return run_descriptors(selected, max_n, jobs);
}

IdentityReport run_identity(const IdentityDescriptor& d, unsigned max_n, unsigned jobs) {
  return run_descriptors({&d}, max_n, jobs).front();
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json params = {{"max_n", r.max_n}, {"range", r.range}, {"cells", r.cells}};
  if (r.failing) params["failing"] = r.failing->to_json();
  nlohmann::json j = {{"id", r.id},
                      {"params", std::move(params)},
                      {"status", r.passed ? "pass" : "fail"},
                      {"millis", static_cast<std::int64_t>(r.millis + 0.5)}};
  if (!r.passed) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    if (!r.detail.empty()) j["detail"] = r.detail;
  }
  return j;
}

}  // namespace nccat
