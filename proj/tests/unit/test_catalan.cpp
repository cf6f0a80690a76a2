#include <doctest.h>

#include "helpers.hpp"
#include "nccat/catalan.hpp"

using namespace nccat;

TEST_SUITE("catalan") {
  TEST_CASE("small Catalan elements") {
    CHECK(catalan(0) == P("x0"));
    CHECK(catalan(1) == P("x1"));
    CHECK(catalan(2) == P("x2 + x1*x0^-1*x1"));
    CHECK(catalan(4).size() == 14);
    CHECK(catalan_oracle(3) == catalan(3));
    CHECK(catalan_oracle(0) == P("x0"));
    CHECK_THROWS_AS(catalan_oracle(kOracleMaxN + 1), std::out_of_range);
  }

  TEST_CASE("truncated") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(truncated(n, 0) == x(n));
    CHECK(truncated_tilde(3, 1) == NCPoly(y(1)) + NCPoly(y(2)) + NCPoly(y(3)));
    for (unsigned n = 1; n <= 8; ++n) {
      CHECK(truncated_tilde(n, n) == truncated_tilde(n, n - 1) * y(1));
      CHECK(truncated(n, n) == catalan(n));
      CHECK(truncated(n, n - 1) == catalan(n));
    }
    CHECK(truncated_tilde(2, 5).is_zero());
    CHECK(truncated_tilde(0, 0) == NCPoly(1));
  }

  TEST_CASE("C~_n^2 as a double sum") {
    for (unsigned n = 2; n <= 6; ++n) {
      NCPoly sum;
      for (unsigned j = 2; j <= n; ++j)
        for (unsigned i = 1; i <= j; ++i) sum += NCPoly(y(i) * y(j - 1));
      CHECK(tilde_oracle(n, 2) == sum);
      CHECK(truncated_tilde(n, 2) == sum);
    }
  }

  TEST_CASE("underline Catalan") {
    CHECK(underline_catalan(0) == NCPoly(1));
    CHECK(underline_catalan(2) == P("x0^2*x1^2 + x0*x1*x0*x1"));
    CHECK(underline_catalan(3) ==
          P("x0^3*x1^3 + x0^2*x1*x0*x1^2 + x0^2*x1^2*x0*x1 + x0*x1*x0^2*x1^2 + x0*x1*x0*x1*x0*x1"));
    for (unsigned n = 0; n <= 8; ++n) CHECK(underline_catalan(n) == sigma(catalan(n)));
  }

  TEST_CASE("double-underline truncated") {
    for (unsigned n = 0; n <= 5; ++n) CHECK(dd_truncated(n, 0) == NCPoly(Word::generator(0, static_cast<int>(n))));
    CHECK(dd_truncated(2, 1) == P("x0^2*x1 + x0*x1*x0"));
    auto x0 = [](unsigned e) { return Word::generator(0, static_cast<int>(e)); };
    const Word x1 = Word::generator(1);
    for (unsigned n = 1; n <= 7; ++n) {
      // sum over i = 1..n-1 of x0^i x1 x0^{n-i}
      NCPoly one(x0(n) * x1);
      for (unsigned i = 1; i < n; ++i) one += NCPoly(x0(i) * x1 * x0(n - i));
      CHECK(dd_truncated(n, 1) == one);
      if (n < 2) continue;
      NCPoly two = one * x1;
      for (unsigned j = 2; j <= n - 1; ++j)
        for (unsigned i = 1; i <= j; ++i) two += NCPoly(x0(i) * x1 * x0(j - i) * x1 * x0(n - j));
      CHECK(dd_truncated(n, 2) == two);
    }
    CHECK(dd_truncated(1, 3).is_zero());
  }
}
