#include <doctest.h>

#include "helpers.hpp"
#include "nccat/catalan.hpp"

using namespace nccat;

TEST_SUITE("serialize") {
  TEST_CASE("text format") {
    CHECK(to_string(catalan(2)) == "x2 + x1*x0^-1*x1");
    CHECK(to_string(NCPoly()) == "0");
    CHECK(to_string(NCPoly(1)) == "1");
    CHECK(to_string(NCPoly(-3)) == "-3");
    CHECK(to_string(P("x1 - 2*x0^-1")) == "-2*x0^-1 + x1");
    CHECK(to_string(P("-x3 + 1")) == "1 - x3");
    CHECK(to_string(Word{}) == "1");
  }

  TEST_CASE("parse") {
    CHECK(P("x2 + x1*x0^-1*x1") == catalan(2));
    CHECK(P("0").is_zero());
    CHECK(P("  x1*x0^-1*x1+x2 ") == catalan(2));
    CHECK(P("x1*x1^-1") == NCPoly(1));
    CHECK(P("123456789012345678901234567890*x1").coefficient(W("x1")) ==
          Integer("123456789012345678901234567890"));
  }

  TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(P("x"), ParseError);
    CHECK_THROWS_AS(P("x1 +"), ParseError);
    CHECK_THROWS_AS(P("y1"), ParseError);
    CHECK_THROWS_AS(P("x1^"), ParseError);
    try {
      P("x1 + x2 $");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.position() == 8);
    }
  }

  TEST_CASE("format(parse(s)) is idempotent on canonical strings") {
    for (unsigned n = 0; n <= 6; ++n) {
      const std::string s = to_string(catalan(n));
      CHECK(to_string(P(s)) == s);
    }
  }

  TEST_CASE("latex") {
    CHECK(to_latex(catalan(2)) == "x_2+x_1x_0^{-1}x_1");
    CHECK(to_latex(sigma(catalan(2))) == "x_0^2x_1^2+x_0x_1x_0x_1");
    CHECK(to_latex(P("x10 - 2*x0")) == "-2x_0+x_{10}");
  }

  TEST_CASE("json round trip with large coefficients") {
    const NCPoly p = P("99999999999999999999999*x1*x0^-1 - 3*x2 + 1");
    const auto j = to_json(p);
    CHECK(j.is_array());
    CHECK(ncpoly_from_json(j) == p);
    CHECK(ncpoly_from_json(nlohmann::json::parse(j.dump())) == p);
    CHECK(to_json(NCPoly(x(1))).dump() == R"([{"coeff":1,"word":[[1,1]]}])");
  }
}
