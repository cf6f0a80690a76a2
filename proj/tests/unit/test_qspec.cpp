#include <doctest.h>

#include "helpers.hpp"
#include "nccat/binomial.hpp"
#include "nccat/catalan.hpp"
#include "nccat/qspec.hpp"

using namespace nccat;

namespace {

QPoly Q(std::string_view s) { return parse_qpoly(s); }

// [n k]_q by the q-Pascal rule [n k] = [n-1 k-1] + q^k [n-1 k].
QPoly pascal_qbinom(unsigned n, unsigned k) {
  if (k > n) return {};
  if (k == 0 || k == n) return 1;
  return pascal_qbinom(n - 1, k - 1) + pascal_qbinom(n - 1, k).shifted(k);
}

}  // namespace

TEST_SUITE("qpoly") {
  TEST_CASE("arithmetic") {
    CHECK(Q("1 + q") * Q("1 + q") == Q("1 + 2*q + q^2"));
    CHECK(exact_div(Q("q^2 - 1"), Q("q - 1")) == Q("q + 1"));
    CHECK(QPoly::monomial(-1) * QPoly::q() == QPoly(1));
    CHECK((Q("q") - Q("q")).is_zero());
    CHECK(Q("3 + q^-2").low_degree() == -2);
    CHECK(Q("2*q^3 - q").at_one() == 1);
    CHECK_THROWS_AS(exact_div(Q("q^2 + 1"), Q("q - 1")), NotDivisible);
    CHECK_THROWS_AS(exact_div(Q("q"), QPoly()), std::domain_error);
    CHECK(exact_div(Integer(12), Integer(4)) == 3);
    CHECK_THROWS_AS(exact_div(Integer(7), Integer(2)), NotDivisible);
  }

  TEST_CASE("text and json") {
    CHECK(to_string(Q("q^3 + 1 + 2*q")) == "1 + 2*q + q^3");
    CHECK(to_string(QPoly()) == "0");
    CHECK(to_string(Q("-q^-1")) == "-q^-1");
    const QPoly p = Q("5 - 3*q^2 + q^-4");
    CHECK(qpoly_from_json(to_json(p)) == p);
    CHECK(parse_qpoly(to_string(p)) == p);
  }
}

TEST_SUITE("qspec") {
  TEST_CASE("q-integers and q-binomials") {
    CHECK(q_int(3) == Q("1 + q + q^2"));
    CHECK(q_int(0).is_zero());
    CHECK(q_binomial(2, 1) == Q("1 + q"));
    CHECK(q_binomial(4, 2) == Q("1 + q + 2*q^2 + q^3 + q^4"));
    for (unsigned n = 0; n <= 9; ++n)
      for (unsigned k = 0; k <= n + 1; ++k) CHECK(q_binomial(n, k) == pascal_qbinom(n, k));
  }

  TEST_CASE("chi_q") {
    CHECK(chi_q(NCPoly(1)) == QPoly(1));
    CHECK(chi_q(catalan(3)) == Q("1 + 2*q + q^2 + q^3"));
    CHECK(chi_q(x(3, -1)) == Q("q^-3"));
    // The value on C~_n^1 is [n]_q.
    for (unsigned n = 1; n <= 8; ++n) CHECK(chi_q(truncated_tilde(n, 1)) == q_int(n));
  }

  TEST_CASE("Garsia-Haiman polynomials") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(gh_cnk(n, 0) == QPoly(1));
    CHECK(gh_cnk(2, 2) == Q("1 + q"));
    CHECK_THROWS_AS(gh_cnk(1, 2), std::invalid_argument);
    for (unsigned n = 1; n <= 8; ++n)
      for (unsigned k = 1; k <= n; ++k) {
        const QPoly rhs = (k <= n - 1 ? gh_cnk(n - 1, k) : QPoly()) + gh_cnk(n, k - 1).shifted(n - k);
        CHECK(gh_cnk(n, k) == rhs);
      }
  }

  TEST_CASE("determinants") {
    QMatrix a(2, 2);
    a << QPoly(1), QPoly(1), QPoly(1), Q("1 + q");
    CHECK(determinant(a) == Q("q"));
    CHECK(q_hankel_det(1, 1) == Q("q^3"));
    CHECK(q_hankel_det(0, 2) == Q("q^7"));
    CHECK(q_hankel_det_closed_form(0, 3) == Q("q^22"));
    IntMatrix b(3, 3);
    b << 2, 0, 1, 1, 3, 2, 1, 1, 2;
    CHECK(bareiss_determinant(b) == Integer(6));
    IntMatrix singular(2, 2);
    singular << 1, 2, 2, 4;
    CHECK(bareiss_determinant(singular) == Integer(0));
    IntMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    CHECK(bareiss_determinant(swap) == Integer(-1));
  }
}
