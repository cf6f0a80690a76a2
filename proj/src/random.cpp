#include "nccat/random.hpp"

namespace nccat {

namespace {

template <class T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

}  // namespace

Word random_word(std::mt19937_64& rng, const RandomShape& shape) {
  Word w;
  const auto len = uniform<std::size_t>(rng, 0, shape.max_letters);
  for (std::size_t i = 0; i < len; ++i) {
    std::int32_t e = 0;
    while (e == 0) e = uniform<std::int32_t>(rng, -shape.max_exponent, shape.max_exponent);
    w.push_back({uniform<std::uint32_t>(rng, 0, shape.max_index), e});
  }
  return w;
}

NCPoly random_poly(std::mt19937_64& rng, const RandomShape& shape) {
  std::vector<NCPoly::Term> terms;
  const auto count = uniform<std::size_t>(rng, 0, shape.max_terms);
  for (std::size_t i = 0; i < count; ++i) {
    int c = 0;
    while (c == 0) c = uniform<int>(rng, -shape.max_coeff, shape.max_coeff);
    terms.emplace_back(random_word(rng, shape), c);
  }
  return NCPoly::from_terms(std::move(terms));
}

Word random_alternating_word(std::mt19937_64& rng, std::uint32_t max_index, std::size_t max_letters) {
  auto len = uniform<std::size_t>(rng, 1, std::max<std::size_t>(1, max_letters));
  if (len % 2 == 0) --len;
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push_back({uniform<std::uint32_t>(rng, 0, max_index), i % 2 == 0 ? 1 : -1});
  return w;
}

NCPoly random_alternating_poly(std::mt19937_64& rng, std::uint32_t max_index, std::size_t max_letters,
                               std::size_t max_terms) {
  std::vector<NCPoly::Term> terms;
  const auto count = uniform<std::size_t>(rng, 1, std::max<std::size_t>(1, max_terms));
  for (std::size_t i = 0; i < count; ++i) {
    int c = 0;
    while (c == 0) c = uniform<int>(rng, -3, 3);
    terms.emplace_back(random_alternating_word(rng, max_index, max_letters), c);
  }
  return NCPoly::from_terms(std::move(terms));
}

}  // namespace nccat
