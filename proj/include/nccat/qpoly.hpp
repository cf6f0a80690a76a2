#pragma once

// Laurent polynomials in one commuting variable q with integer coefficients.

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nccat/ncpoly.hpp"

namespace nccat {

/// Thrown by exact_div when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class QPoly {
 public:
  using Exponent = std::int64_t;

  QPoly() = default;
  QPoly(int c);  // NOLINT(google-explicit-constructor): Eigen builds scalars from 0 and 1
  explicit QPoly(const Integer& c);

  /// c * q^e
  static QPoly monomial(Exponent e, const Integer& c = 1);
  static QPoly q() { return monomial(1); }

  const std::map<Exponent, Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Integer coefficient(Exponent e) const;
  Exponent low_degree() const;   // requires !is_zero()
  Exponent high_degree() const;  // requires !is_zero()
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// Value at q = 1.
  Integer at_one() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  /// Multiplies by q^e.
  QPoly shifted(Exponent e) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void add_term(Exponent e, const Integer& c);
  std::map<Exponent, Integer> coeffs_;
};

/// a / b in Z[q, q^{-1}]; throws NotDivisible unless b divides a exactly
/// (and std::domain_error for b = 0).
QPoly exact_div(const QPoly& a, const QPoly& b);

/// Exact integer division; throws NotDivisible on a remainder.
Integer exact_div(const Integer& a, const Integer& b);

/// "1 + 2*q + q^3"; ascending exponents, "0" for zero.
std::string to_string(const QPoly& p);
inline std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << to_string(p); }
QPoly parse_qpoly(std::string_view text);

/// {"<exponent>": coefficient, ...}
nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

}  // namespace nccat
