#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nccat/catalan.hpp"
#include "nccat/qspec.hpp"
#include "nccat/random.hpp"

using namespace nccat;

TEST_SUITE("properties") {
  TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(20261018);
    const RandomShape shape;
    for (int trial = 0; trial < 200; ++trial) {
      const NCPoly a = random_poly(rng, shape);
      const NCPoly b = random_poly(rng, shape);
      const NCPoly c = random_poly(rng, shape);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a + b == b + a);
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("maps are homomorphisms") {
    std::mt19937_64 rng(7);
    const RandomShape shape;
    for (int trial = 0; trial < 200; ++trial) {
      const NCPoly a = random_poly(rng, shape);
      const NCPoly b = random_poly(rng, shape);
      CHECK(bar(a * b) == bar(b) * bar(a));
      CHECK(bar(bar(a)) == a);
      CHECK(shift(a * b, 2) == shift(a, 2) * shift(b, 2));
      CHECK(eps(a * b) == eps(a) * eps(b));
      CHECK(sigma(a * b) == sigma(a) * sigma(b));
      CHECK(pi(a * b) == pi(a) * pi(b));
      CHECK(chi_q(a * b) == chi_q(a) * chi_q(b));
      CHECK(eps(sigma(a)) == eps(a));
    }
  }

  TEST_CASE("sigma(T(x)) = x0 sigma(x) x1 on alternating combinations") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
      const NCPoly a = random_alternating_poly(rng, 5, 7, 4);
      CHECK(sigma(shift(a, 1)) == x(0) * sigma(a) * x(1));
    }
  }

  TEST_CASE("serialization round trips on random polynomials") {
    std::mt19937_64 rng(3);
    RandomShape shape;
    shape.max_coeff = 1000;
    shape.max_index = 12;
    for (int trial = 0; trial < 200; ++trial) {
      const NCPoly a = random_poly(rng, shape);
      CHECK(parse_ncpoly(to_string(a)) == a);
      CHECK(ncpoly_from_json(to_json(a)) == a);
    }
  }
}
