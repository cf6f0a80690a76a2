#pragma once

// Registry of machine-checkable identities. Each identity expands a size
// bound into a list of parameter cells; every cell is checked by a pure
// function, so cells can run on any thread in any order.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace nccat {

/// Named integer parameters of one cell, e.g. {{"m", 1}, {"n", 3}}.
struct Params {
  std::vector<std::pair<std::string, long>> values;

  long at(std::string_view name) const;
  std::string to_string() const;
  nlohmann::json to_json() const;
};

struct CheckOutcome {
  bool passed = true;
  std::string lhs;
  std::string rhs;
  std::string detail;

  static CheckOutcome pass() { return {}; }
  static CheckOutcome fail(std::string lhs, std::string rhs, std::string detail = {}) {
    return {false, std::move(lhs), std::move(rhs), std::move(detail)};
  }
};

struct IdentityDescriptor {
  std::string id;
  /// Anchor of the statement being checked (theorem name or formula).
  std::string reference;
  /// What the size bound N limits, e.g. "0 <= k <= n <= N".
  std::string range;
  unsigned default_max_n = 0;
  std::function<std::vector<Params>(unsigned max_n)> cells;
  std::function<CheckOutcome(const Params&)> check;
  /// Largest N the identity runs at; a larger requested bound is clamped.
  unsigned cap = 1000;
};

/// All identities, sorted by id.
const std::vector<IdentityDescriptor>& identity_registry();
const IdentityDescriptor* find_identity(std::string_view id);

struct IdentityReport {
  std::string id;
  std::string reference;
  std::string range;
  unsigned max_n = 0;
  std::size_t cells = 0;
  bool passed = true;
  double millis = 0;
  /// First failing cell in cell order, with both sides.
  std::optional<Params> failing;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// Runs the named identities (or all of them for suite "all"). Each
/// identity uses max_n (clamped to its cap) when given, otherwise its default. Cells are spread
/// over `jobs` worker threads; the result order is the registry order.
/// Throws std::invalid_argument for an unknown suite id.
std::vector<IdentityReport> run_suite(std::string_view suite, std::optional<unsigned> max_n,
                                      unsigned jobs);

IdentityReport run_identity(const IdentityDescriptor& d, unsigned max_n, unsigned jobs = 1);

/// {"id", "params", "status", "millis", "lhs"?, "rhs"?}
nlohmann::json to_json(const IdentityReport& r);

}  // namespace nccat
