#pragma once

// Text, LaTeX and JSON forms of words and group-ring elements.
//
// Text grammar (bit-exact, shared with the CLI):
//   poly   := "0" | term ((" + " | " - ") term)*
//   term   := ["-"] (int | [int "*"] factor ("*" factor)*)
//   factor := "x" int ["^" int]
// The identity word prints as "1"; unit coefficients are omitted.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nccat/ncpoly.hpp"

namespace nccat {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

std::string to_string(const Word& w);
std::string to_string(const NCPoly& p);

inline std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << to_string(p); }

/// Display form: x_1x_0^{-1}x_1, terms joined by "+".
std::string to_latex(const Word& w);
std::string to_latex(const NCPoly& p);

/// Accepts the canonical output of to_string plus free spacing and terms in
/// any order. Throws ParseError on malformed input.
NCPoly parse_ncpoly(std::string_view text);
Word parse_word(std::string_view text);

/// [{"coeff": c, "word": [[index, exponent], ...]}, ...] in canonical order.
/// Coefficients outside the int64 range are written as decimal strings.
nlohmann::json to_json(const NCPoly& p);
NCPoly ncpoly_from_json(const nlohmann::json& j);

nlohmann::json integer_to_json(const Integer& c);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace nccat
