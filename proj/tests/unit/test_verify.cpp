#include <doctest.h>

#include <set>

#include "nccat/verify.hpp"

using namespace nccat;

TEST_SUITE("verify") {
  TEST_CASE("registry ids are unique and sorted") {
    const auto& reg = identity_registry();
    REQUIRE(!reg.empty());
    std::set<std::string> ids;
    for (std::size_t i = 0; i < reg.size(); ++i) {
      ids.insert(reg[i].id);
      if (i > 0) CHECK(reg[i - 1].id < reg[i].id);
      CHECK(!reg[i].reference.empty());
      CHECK(!reg[i].cells(2).empty());
    }
    CHECK(ids.size() == reg.size());
    CHECK(find_identity("bar-invariance") != nullptr);
    CHECK(find_identity("no-such-id") == nullptr);
  }

  TEST_CASE("running a suite") {
    const auto reports = run_suite("bar-invariance", 8, 2);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].passed);
    CHECK(reports[0].cells == 9);
    const auto j = to_json(reports[0]);
    CHECK(j["status"] == "pass");
    CHECK(j.contains("millis"));
    CHECK_FALSE(j.contains("lhs"));
    CHECK_THROWS_AS(run_suite("no-such-id", std::nullopt, 1), std::invalid_argument);
  }

  TEST_CASE("caps clamp the requested bound") {
    const auto reports = run_suite("hankel-inverse", 9, 1);
    CHECK(reports[0].max_n == 4);
  }

  TEST_CASE("a failing check reports the first failing cell") {
    IdentityDescriptor d{"fake", "n < 3", "0 <= n <= N", 5,
                         [](unsigned max_n) {
                           std::vector<Params> out;
                           for (long n = 0; n <= static_cast<long>(max_n); ++n) out.push_back({{{"n", n}}});
                           return out;
                         },
                         [](const Params& p) {
                           return p.at("n") < 3 ? CheckOutcome::pass()
                                                : CheckOutcome::fail(std::to_string(p.at("n")), "< 3");
                         }};
    for (unsigned jobs : {1u, 3u}) {
      const IdentityReport r = run_identity(d, 6, jobs);
      CHECK_FALSE(r.passed);
      REQUIRE(r.failing.has_value());
      CHECK(r.failing->at("n") == 3);
      CHECK(r.lhs == "3");
      const auto j = to_json(r);
      CHECK(j["status"] == "fail");
      CHECK(j["rhs"] == "< 3");
    }
  }

  TEST_CASE("exceptions become failures") {
    IdentityDescriptor d{"throws", "", "", 1, [](unsigned) { return std::vector<Params>{{}}; },
                         [](const Params& p) { return CheckOutcome::fail(std::to_string(p.at("missing")), ""); }};
    const IdentityReport r = run_identity(d, 1);
    CHECK_FALSE(r.passed);
    CHECK(r.detail.find("exception") != std::string::npos);
  }
}
