#include <doctest.h>

#include "helpers.hpp"
#include "nccat/catalan.hpp"
#include "nccat/hankel.hpp"

using namespace nccat;

namespace {

NCMatrix M(std::initializer_list<std::initializer_list<const char*>> rows) {
  NCMatrix a(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const char* s : r) a(i, j++) = P(s);
    ++i;
  }
  return a;
}

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("Hankel matrices") {
    const NCMatrix h = hankel(0, 1);
    CHECK(h == M({{"x0", "x1"}, {"x1", "x2 + x1*x0^-1*x1"}}));
    const NCMatrix h1 = hankel(1, 2);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(h1(i, j) == catalan(1 + i + j));
    CHECK(hankel(0, 0) == M({{"x0"}}));
  }

  TEST_CASE("Gauss factors") {
    CHECK(gauss_L(0, 2)(2, 1) == NCPoly(y(1)) + NCPoly(y(2)) + NCPoly(y(3)));
    const NCMatrix u = gauss_U(0, 3);
    for (int i = 0; i <= 3; ++i) CHECK(u(i, i) == x(2 * i));
    CHECK(is_lower_unitriangular(gauss_L(1, 3)));
    CHECK(mat_mul(gauss_L(0, 1), gauss_U(0, 1)) == hankel(0, 1));
    for (unsigned m = 0; m <= 1; ++m) CHECK(mat_mul(gauss_L(m, 2), gauss_U(m, 2))(0, 0) == catalan(m));
  }

  TEST_CASE("inverse factors") {
    CHECK(inv_L(0, 1) == M({{"1", "0"}, {"-x1*x0^-1", "1"}}));
    CHECK(inv_U(0, 1) == M({{"x0^-1", "-x0^-1*x1*x2^-1"}, {"0", "x2^-1"}}));
    CHECK(mat_mul(gauss_L(0, 3), inv_L(0, 3)) == mat_identity<NCPoly>(4));
    CHECK(hankel_inverse(0, 1)(1, 1) == x(2, -1));
    for (unsigned m = 0; m <= 1; ++m) CHECK(hankel_inverse(m, 0) == M({{m == 0 ? "x0^-1" : "x1^-1"}}));
    CHECK(mat_mul(hankel(1, 2), hankel_inverse(1, 2)) == mat_identity<NCPoly>(3));
    CHECK(mat_mul(hankel(0, 1), mat_mul(inv_U(0, 1), inv_L(0, 1))) == mat_identity<NCPoly>(2));
    CHECK_THROWS_AS(hankel_inverse(2, 1), std::invalid_argument);
  }

  TEST_CASE("unitriangular inverse") {
    CHECK(invert_unitriangular(gauss_L(0, 4)) == inv_L(0, 4));
    CHECK(invert_unitriangular(mat_identity<NCPoly>(3)) == mat_identity<NCPoly>(3));
    const NCMatrix a = M({{"1", "0"}, {"x3*x1^-1 + 2", "1"}});
    CHECK(invert_unitriangular(a) == M({{"1", "0"}, {"-x3*x1^-1 - 2", "1"}}));
    CHECK_THROWS_AS(invert_unitriangular(M({{"1", "x1"}, {"0", "1"}})), std::invalid_argument);
    CHECK_THROWS_AS(invert_unitriangular(M({{"x1"}})), std::invalid_argument);
  }

  TEST_CASE("matrix product is noncommutative and checks shapes") {
    const NCMatrix a = M({{"x1"}});
    const NCMatrix b = M({{"x2"}});
    CHECK(mat_mul(a, b) == M({{"x1*x2"}}));
    CHECK(mat_mul(b, a) == M({{"x2*x1"}}));
    const NCMatrix c = M({{"x1", "x0"}});
    CHECK(mat_mul(c, mat_identity<NCPoly>(2)) == c);
    CHECK_THROWS_AS(mat_mul(c, c), std::invalid_argument);
  }

  TEST_CASE("bordered quasideterminants") {
    CHECK(quasidet_bordered(0, 1, 1) == P("x2"));
    CHECK(quasidet_bordered(0, 1, 2) == truncated(3, 1));
    CHECK(quasidet_bordered(1, 2, 2) == P("x5"));
    CHECK(quasidet_bordered(0, 0, 3) == catalan(3));
    CHECK_THROWS_AS(quasidet_bordered(0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(quasidet_bordered(2, 1, 1), std::invalid_argument);
  }

  TEST_CASE("json rows") {
    CHECK(to_json(hankel(0, 1)).dump() == R"([["x0","x1"],["x1","x2 + x1*x0^-1*x1"]])");
  }
}
