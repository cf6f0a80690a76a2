#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nccat/catalan.hpp"
#include "nccat/paths.hpp"

using namespace nccat;

namespace {

LatticePath L(std::string_view s) { return LatticePath::from_string(s); }

}  // namespace

TEST_SUITE("paths") {
  TEST_CASE("enumeration sizes") {
    CHECK(enumerate_paths(2).size() == 2);
    CHECK(enumerate_paths(3, 1).size() == 3);
    CHECK(enumerate_paths(0).size() == 1);
    CHECK(enumerate_paths(0).front().steps().empty());
    CHECK(enumerate_paths(7).size() == 429);
    CHECK_THROWS_AS(enumerate_paths(2, 3), std::invalid_argument);
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(L("EEN"), std::invalid_argument);
    CHECK_THROWS_AS(L("EXNN"), std::invalid_argument);
    CHECK(L("ENEN").is_catalan());
    CHECK_FALSE(L("NEEN").is_catalan());
    CHECK(L("EENN").last_east_height() == 0);
    CHECK(L("ENEN").last_east_height() == 1);
  }

  TEST_CASE("path monomials") {
    CHECK(path_monomial(L("ENEN")) == W("x1*x0^-1*x1"));
    CHECK(path_monomial(L("EEENNN")) == W("x3"));
    CHECK(path_monomial(L("")) == W("x0"));
    TermAccumulator acc;
    for (const auto& p : enumerate_paths(3)) acc.add(path_monomial(p), 1);
    CHECK(std::move(acc).finish() == P("x3 + x2*x1^-1*x2 + x2*x0^-1*x1 + x1*x0^-1*x2 + x1*x0^-1*x1*x0^-1*x1"));
  }

  TEST_CASE("reflection") {
    for (unsigned n = 0; n <= 5; ++n) {
      for (const auto& p : enumerate_paths(n)) {
        CHECK(path_reflect(path_reflect(p)) == p);
        CHECK(bar(path_monomial(p)) == path_monomial(path_reflect(p)));
      }
    }
    CHECK(path_reflect(L("EEENNN")) == L("EEENNN"));
    CHECK(path_reflect(L("EENENN")) == L("EENENN"));
    CHECK(path_reflect(L("EENNEN")) == L("ENEENN"));
  }

  TEST_CASE("jump monomials") {
    CHECK(jump_monomial(L("EENN")) == W("x0^2*x1^2"));
    CHECK(jump_monomial(L("ENEN")) == W("x0*x1*x0*x1"));
    TermAccumulator acc;
    for (const auto& p : enumerate_paths(4)) acc.add(jump_monomial(p), 1);
    CHECK(std::move(acc).finish() == underline_catalan(4));
  }

  TEST_CASE("J-sequences") {
    const auto j = enumerate_jseq(2, 2);
    REQUIRE(j.size() == 2);
    CHECK(j[0].entries == std::vector<unsigned>{1, 2});
    CHECK(j[1].entries == std::vector<unsigned>{2, 2});
    CHECK(jseq_word(j[0]) == W("x1*x0^-1*x1*x0^-1"));
    const std::size_t catalan_numbers[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    for (unsigned n = 0; n <= 8; ++n) CHECK(enumerate_jseq(n, n).size() == catalan_numbers[n]);
    CHECK(enumerate_jseq(3, 0).size() == 1);
    CHECK_THROWS_AS(enumerate_jseq(1, 2), std::invalid_argument);
  }

  TEST_CASE("path to J-sequence") {
    CHECK(path_to_jseq(L("ENEN"), 2).entries == std::vector<unsigned>{1, 2});
    CHECK(path_to_jseq(L("EENN"), 2).entries == std::vector<unsigned>{2, 2});
    CHECK(path_to_jseq(L("EENN"), 0).entries.empty());
  }
}
