#include "nccat/ncpoly.hpp"

#include <algorithm>

namespace nccat {

namespace {

bool term_less(const NCPoly::Term& a, const NCPoly::Term& b) {
  return canonical_compare(a.first, b.first) < 0;
}

// Merges two canonical term lists, scaling the second by sign.
std::vector<NCPoly::Term> merge(const std::vector<NCPoly::Term>& a,
                                const std::vector<NCPoly::Term>& b, int sign) {
  std::vector<NCPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && term_less(*i, *j))) {
      out.push_back(*i++);
    } else if (i == a.end() || term_less(*j, *i)) {
      out.emplace_back(j->first, sign > 0 ? j->second : Integer(-j->second));
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->second + j->second) : Integer(i->second - j->second);
      if (c != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

NCPoly::NCPoly(int c) {
  if (c != 0) terms_.emplace_back(Word{}, Integer(c));
}

NCPoly::NCPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(Word{}, c);
}

NCPoly::NCPoly(Word w, Integer c) {
  if (c != 0) terms_.emplace_back(std::move(w), std::move(c));
}

NCPoly NCPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  NCPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

Integer NCPoly::coefficient(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& key) {
    return canonical_compare(t.first, key) < 0;
  });
  if (it != terms_.end() && it->first == w) return it->second;
  return 0;
}

std::uint32_t NCPoly::max_index() const {
  std::uint32_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.max_index());
  return m;
}

NCPoly& NCPoly::operator+=(const NCPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

NCPoly& NCPoly::operator*=(const NCPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].first.empty() && a.terms_[0].second == 1) return b;
  if (b.size() == 1 && b.terms_[0].first.empty() && b.terms_[0].second == 1) return a;
  TermAccumulator acc;
  Integer c;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      c = ca * cb;
      acc.add(wa * wb, c);
    }
  }
  return std::move(acc).finish();
}

NCPoly operator*(const NCPoly& a, const Word& w) {
  std::vector<NCPoly::Term> terms;
  terms.reserve(a.size());
  for (const auto& [wa, ca] : a.terms_) terms.emplace_back(wa * w, ca);
  return NCPoly::from_terms(std::move(terms));
}

NCPoly operator*(const Word& w, const NCPoly& a) {
  std::vector<NCPoly::Term> terms;
  terms.reserve(a.size());
  for (const auto& [wa, ca] : a.terms_) terms.emplace_back(w * wa, ca);
  return NCPoly::from_terms(std::move(terms));
}

NCPoly NCPoly::operator-() const {
  NCPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

void TermAccumulator::add(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add(Word&& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) it->second += c;
}

void TermAccumulator::add(const NCPoly& p, const Integer& scale) {
  for (const auto& [w, c] : p) add(w, Integer(c * scale));
}

NCPoly TermAccumulator::finish() && {
  std::vector<NCPoly::Term> terms;
  terms.reserve(terms_.size());
  for (auto& [w, c] : terms_) {
    if (c != 0) terms.emplace_back(w, std::move(c));
  }
  terms_.clear();
  return NCPoly::from_terms(std::move(terms));
}

NCPoly map_words(const NCPoly& p, const std::function<Word(const Letter&)>& letter_image) {
  std::vector<NCPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [w, c] : p) {
    Word image;
    for (const Letter& l : w.letters()) image *= letter_image(l);
    terms.emplace_back(std::move(image), c);
  }
  return NCPoly::from_terms(std::move(terms));
}

Word bar(const Word& w) {
  std::vector<Letter> rev(w.letters().rbegin(), w.letters().rend());
  return Word(rev);
}

NCPoly bar(const NCPoly& p) {
  std::vector<NCPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [w, c] : p) terms.emplace_back(bar(w), c);
  return NCPoly::from_terms(std::move(terms));
}

Word shift(const Word& w, std::uint32_t r) {
  if (r == 0) return w;
  std::vector<Letter> out(w.letters().begin(), w.letters().end());
  for (Letter& l : out) l.index += r;
  return Word(out);
}

NCPoly shift(const NCPoly& p, std::uint32_t r) {
  if (r == 0) return p;
  std::vector<NCPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [w, c] : p) terms.emplace_back(shift(w, r), c);
  return NCPoly::from_terms(std::move(terms));
}

Integer eps(const NCPoly& p) {
  Integer s = 0;
  for (const auto& [w, c] : p) s += c;
  return s;
}

namespace {

Word power(const Word& base, std::int32_t e) {
  Word out;
  const Word step = e > 0 ? base : base.inverse();
  for (std::int32_t i = 0; i < (e > 0 ? e : -e); ++i) out *= step;
  return out;
}

Word sigma_letter(const Letter& l) {
  const auto k = static_cast<std::int32_t>(l.index);
  return power(Word{{0, k}, {1, k}}, l.exponent);
}

Word pi_letter(const Letter& l) {
  Word image = Word::generator(0) * power(Word{{0, -1}, {1, 1}}, static_cast<std::int32_t>(l.index));
  return power(image, l.exponent);
}

Word apply_letters(const Word& w, Word (*f)(const Letter&)) {
  Word out;
  for (const Letter& l : w.letters()) out *= f(l);
  return out;
}

}  // namespace

Word sigma(const Word& w) { return apply_letters(w, sigma_letter); }
Word pi(const Word& w) { return apply_letters(w, pi_letter); }

NCPoly sigma(const NCPoly& p) { return map_words(p, sigma_letter); }
NCPoly pi(const NCPoly& p) { return map_words(p, pi_letter); }

}  // namespace nccat
