#include "nccat/qpoly.hpp"

#include <cctype>

#include "nccat/serialize.hpp"

namespace nccat {

QPoly::QPoly(int c) {
  if (c != 0) coeffs_.emplace(0, c);
}

QPoly::QPoly(const Integer& c) {
  if (c != 0) coeffs_.emplace(0, c);
}

QPoly QPoly::monomial(Exponent e, const Integer& c) {
  QPoly p;
  if (c != 0) p.coeffs_.emplace(e, c);
  return p;
}

Integer QPoly::coefficient(Exponent e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

QPoly::Exponent QPoly::low_degree() const { return coeffs_.begin()->first; }
QPoly::Exponent QPoly::high_degree() const { return coeffs_.rbegin()->first; }

Integer QPoly::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

void QPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  for (const auto& [e, c] : rhs.coeffs_) add_term(e, Integer(-c));
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, Integer(ca * cb));
  return out;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& [e, c] : p.coeffs_) c = -c;
  return p;
}

QPoly QPoly::shifted(Exponent e) const {
  QPoly p;
  for (const auto& [k, c] : coeffs_) p.coeffs_.emplace(k + e, c);
  return p;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw NotDivisible("integer division leaves a remainder");
  return q;
}

QPoly exact_div(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  const auto b_low = b.low_degree();
  const auto b_high = b.high_degree();
  const Integer lead = b.coefficient(b_high);
  const auto min_exponent = a.low_degree() - b_low;
  QPoly quotient;
  QPoly rest = a;
  while (!rest.is_zero() && rest.high_degree() - b_high >= min_exponent) {
    const auto e = rest.high_degree() - b_high;
    Integer c = exact_div(rest.coefficient(rest.high_degree()), lead);
    QPoly step = QPoly::monomial(e, c);
    quotient += step;
    rest -= step * b;
  }
  if (!rest.is_zero()) throw NotDivisible("polynomial division leaves a remainder");
  return quotient;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.coeffs()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 'q';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class QParser {
 public:
  explicit QParser(std::string_view text) : text_(text) {}

  QPoly parse() {
    skip();
    if (at_end()) fail("empty input");
    QPoly out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = text_[pos_++] == '-';
      skip();
    }
    out += term(negative);
    skip();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip();
      out += term(op == '-');
      skip();
    }
    return out;
  }

 private:
  QPoly term(bool negative) {
    Integer c = 1;
    QPoly::Exponent e = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = integer();
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip();
        e = q_power();
      }
    } else {
      e = q_power();
    }
    return QPoly::monomial(e, negative ? Integer(-c) : c);
  }

  QPoly::Exponent q_power() {
    if (peek() != 'q') fail("expected 'q'");
    ++pos_;
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Integer e = integer();
    if (!e.fits_slong_p()) fail("exponent out of range");
    return neg ? -e.get_si() : e.get_si();
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_qpoly(std::string_view text) { return QParser(text).parse(); }

nlohmann::json to_json(const QPoly& p) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [e, c] : p.coeffs()) obj[std::to_string(e)] = integer_to_json(c);
  return obj;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
  QPoly p;
  for (const auto& [key, value] : j.items()) p += QPoly::monomial(std::stoll(key), integer_from_json(value));
  return p;
}

}  // namespace nccat
