#include <doctest.h>

#include "helpers.hpp"
#include "nccat/catalan.hpp"

using namespace nccat;

TEST_SUITE("ncpoly") {
  TEST_CASE("addition cancels to canonical form") {
    CHECK(P("x2 + x1*x0^-1*x1") + P("-x2") == P("x1*x0^-1*x1"));
    CHECK((P("x1") - P("x1")).is_zero());
    CHECK(P("x1 + x1").coefficient(W("x1")) == 2);
    CHECK(P("x1 - x1").size() == 0);
  }

  TEST_CASE("product keeps factor order") {
    CHECK(P("x1") * P("x0") != P("x0") * P("x1"));
    CHECK(P("x1 + x2") * P("x1^-1") == P("1 + x2*x1^-1"));
    CHECK(catalan(1) * W("x0^-1") * shift(catalan(0), 1) == P("x1*x0^-1*x1"));
    const NCPoly p = P("3*x1 - x2*x0^-1");
    CHECK(p * NCPoly(1) == p);
    CHECK(NCPoly(1) * p == p);
    CHECK((p * NCPoly(0)).is_zero());
  }

  TEST_CASE("from_terms combines and purges zeros") {
    const auto p = NCPoly::from_terms({{W("x1"), 2}, {W("x0"), 1}, {W("x1"), -2}});
    CHECK(p == P("x0"));
  }

  TEST_CASE("bar") {
    CHECK(bar(W("x2*x0^-1*x1")) == W("x1*x0^-1*x2"));
    CHECK(bar(catalan(2)) == catalan(2));
    CHECK(bar(Word{}).empty());
  }

  TEST_CASE("shift") {
    CHECK(shift(W("x0^-1*x1"), 1) == W("x1^-1*x2"));
    CHECK(shift(catalan(1), 1) == P("x2"));
    CHECK(catalan(2) == shift(catalan(1), 1) + catalan(1) * W("x0^-1") * shift(catalan(0), 1));
    CHECK(shift(NCPoly(1), 5) == NCPoly(1));
  }

  TEST_CASE("eps") {
    CHECK(eps(catalan(3)) == 5);
    CHECK(eps(NCPoly()) == 0);
    CHECK(eps(truncated(4, 2)) == 9);
    CHECK(eps(P("2*x1 - 5*x0*x1^-1")) == -3);
  }

  TEST_CASE("sigma") {
    CHECK(sigma(W("x2")) == W("x0^2*x1^2"));
    CHECK(sigma(W("x0")).empty());
    CHECK(sigma(W("x2^-1")) == W("x1^-2*x0^-2"));
    CHECK(sigma(catalan(2)) == P("x0^2*x1^2 + x0*x1*x0*x1"));
  }

  TEST_CASE("pi") {
    CHECK(pi(W("x1")) == W("x1"));
    CHECK(pi(W("x2")) == W("x1*x0^-1*x1"));
    CHECK(pi(W("x0")) == W("x0"));
    CHECK(pi(catalan(2)) == P("2*x1*x0^-1*x1"));
  }
}
