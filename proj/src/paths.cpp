#include "nccat/paths.hpp"

#include <stdexcept>

#include "nccat/ncpoly.hpp"

namespace nccat {

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
  std::size_t east = 0;
  for (Step s : steps_) east += s == Step::East;
  if (steps_.size() % 2 != 0 || east * 2 != steps_.size())
    throw std::invalid_argument("lattice path needs equal numbers of East and North steps");
}

LatticePath LatticePath::from_string(std::string_view es) {
  std::vector<Step> steps;
  steps.reserve(es.size());
  for (char c : es) {
    if (c == 'E') {
      steps.push_back(Step::East);
    } else if (c == 'N') {
      steps.push_back(Step::North);
    } else {
      throw std::invalid_argument("path strings use only 'E' and 'N'");
    }
  }
  return LatticePath(std::move(steps));
}

bool LatticePath::is_catalan() const {
  int content = 0;
  for (Step s : steps_) {
    content += s == Step::East ? 1 : -1;
    if (content < 0) return false;
  }
  return true;
}

unsigned LatticePath::last_east_height() const {
  unsigned height = 0;
  unsigned at_last_east = 0;
  for (Step s : steps_) {
    if (s == Step::East) {
      at_last_east = height;
    } else {
      ++height;
    }
  }
  return at_last_east;
}

std::string to_string(const LatticePath& p) {
  std::string out;
  for (Step s : p.steps()) out += s == Step::East ? 'E' : 'N';
  return out;
}

namespace {

void extend_paths(unsigned n, unsigned east, unsigned north, std::vector<Step>& prefix,
                  std::vector<LatticePath>& out) {
  if (east == n && north == n) {
    out.emplace_back(prefix);
    return;
  }
  if (east < n) {
    prefix.push_back(Step::East);
    extend_paths(n, east + 1, north, prefix, out);
    prefix.pop_back();
  }
  if (north < east) {
    prefix.push_back(Step::North);
    extend_paths(n, east, north + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<LatticePath> enumerate_paths(unsigned n, std::optional<unsigned> k) {
  if (k && *k > n) throw std::invalid_argument("enumerate_paths: k must not exceed n");
  std::vector<LatticePath> all;
  std::vector<Step> prefix;
  prefix.reserve(2 * n);
  extend_paths(n, 0, 0, prefix, all);
  if (!k) return all;
  std::vector<LatticePath> out;
  for (auto& p : all) {
    if (p.last_east_height() <= *k) out.push_back(std::move(p));
  }
  return out;
}

Word path_monomial(const LatticePath& p) {
  Word w;
  const auto& steps = p.steps();
  int a = 0;
  int b = 0;
  Step prev = Step::East;  // virtual step into (0,0)
  for (std::size_t i = 0; i <= steps.size(); ++i) {
    const Step next = i < steps.size() ? steps[i] : Step::North;  // virtual step out of (n,n)
    if (prev == Step::East && next == Step::North) {
      w.push_back({static_cast<std::uint32_t>(a - b), 1});
    } else if (prev == Step::North && next == Step::East) {
      w.push_back({static_cast<std::uint32_t>(a - b), -1});
    }
    if (i < steps.size()) {
      (next == Step::East ? a : b) += 1;
      prev = next;
    }
  }
  return w;
}

LatticePath path_reflect(const LatticePath& p) {
  std::vector<Step> steps(p.steps().rbegin(), p.steps().rend());
  for (Step& s : steps) s = s == Step::East ? Step::North : Step::East;
  return LatticePath(std::move(steps));
}

Word jump_monomial(const LatticePath& p) { return sigma(path_monomial(p)); }

namespace {

void extend_jseq(unsigned n, unsigned k, std::vector<unsigned>& prefix, std::vector<JSeq>& out) {
  const auto s = static_cast<unsigned>(prefix.size()) + 1;
  if (prefix.size() == k) {
    out.push_back({n, prefix});
    return;
  }
  unsigned lo = prefix.empty() ? s : std::max(prefix.back(), s);
  for (unsigned j = lo; j <= n; ++j) {
    prefix.push_back(j);
    extend_jseq(n, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<JSeq> enumerate_jseq(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("enumerate_jseq: k must not exceed n");
  std::vector<JSeq> out;
  std::vector<unsigned> prefix;
  extend_jseq(n, k, prefix, out);
  return out;
}

Word jseq_word(const JSeq& j) {
  Word w;
  for (std::size_t s = 0; s < j.entries.size(); ++s)
    w *= y(j.entries[s] - static_cast<unsigned>(s));
  return w;
}

JSeq path_to_jseq(const LatticePath& p, unsigned k) {
  JSeq j{p.n(), std::vector<unsigned>(k, 0)};
  unsigned a = 0;
  unsigned b = 0;
  for (Step s : p.steps()) {
    if (s == Step::East) {
      ++a;
    } else {
      ++b;
      if (b >= 1 && b <= k) j.entries[b - 1] = a;
    }
  }
  return j;
}

}  // namespace nccat
