#include "nccat/serialize.hpp"

#include <cctype>
#include <limits>

namespace nccat {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += 'x';
    out += std::to_string(w[i].index);
    if (w[i].exponent != 1) {
      out += '^';
      out += std::to_string(w[i].exponent);
    }
  }
  return out;
}

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Integer mag = abs(c);
    if (w.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += to_string(w);
    }
  }
  return out;
}

namespace {

std::string latex_int(long v) {
  std::string s = std::to_string(v);
  return s.size() == 1 ? s : "{" + s + "}";
}

}  // namespace

std::string to_latex(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    out += "x_" + latex_int(static_cast<long>(l.index));
    if (l.exponent != 1) out += "^" + latex_int(l.exponent);
  }
  return out;
}

std::string to_latex(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? "-" : "+";
    }
    first = false;
    Integer mag = abs(c);
    if (w.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str();
      out += to_latex(w);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NCPoly poly() {
    skip_space();
    if (at_end()) fail("empty input");
    std::vector<NCPoly::Term> terms;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = take() == '-';
      skip_space();
    }
    terms.push_back(term(negative));
    skip_space();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      take();
      skip_space();
      terms.push_back(term(op == '-'));
      skip_space();
    }
    return NCPoly::from_terms(std::move(terms));
  }

  Word word_only() {
    skip_space();
    Word w;
    if (!at_end() && peek() == '1') {
      take();
    } else {
      w = factors();
    }
    skip_space();
    if (!at_end()) fail("trailing input");
    return w;
  }

 private:
  NCPoly::Term term(bool negative) {
    Integer coeff = 1;
    Word w;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = integer();
      skip_space();
      if (!at_end() && peek() == '*') {
        take();
        skip_space();
        w = factors();
      }
    } else {
      w = factors();
    }
    if (negative) coeff = -coeff;
    return {std::move(w), std::move(coeff)};
  }

  Word factors() {
    Word w;
    w.push_back(factor());
    skip_space();
    while (!at_end() && peek() == '*') {
      take();
      skip_space();
      w.push_back(factor());
      skip_space();
    }
    return w;
  }

  Letter factor() {
    if (at_end() || peek() != 'x') fail("expected generator 'x<k>'");
    take();
    const Integer idx = integer();
    if (!idx.fits_uint_p() || idx > std::numeric_limits<std::uint32_t>::max())
      fail("generator index out of range");
    Letter l{static_cast<std::uint32_t>(idx.get_ui()), 1};
    if (!at_end() && peek() == '^') {
      take();
      bool neg = false;
      if (!at_end() && peek() == '-') {
        take();
        neg = true;
      }
      Integer e = integer();
      if (neg) e = -e;
      if (!e.fits_sint_p()) fail("exponent out of range");
      l.exponent = static_cast<std::int32_t>(e.get_si());
      if (l.exponent == 0) fail("zero exponent");
    }
    return l;
  }

  Integer integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NCPoly parse_ncpoly(std::string_view text) { return Parser(text).poly(); }

Word parse_word(std::string_view text) { return Parser(text).word_only(); }

nlohmann::json integer_to_json(const Integer& c) {
  if (c.fits_slong_p()) return static_cast<std::int64_t>(c.get_si());
  return c.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("coefficient must be an integer or decimal string");
}

nlohmann::json to_json(const NCPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : p) {
    nlohmann::json letters = nlohmann::json::array();
    for (const Letter& l : w.letters()) letters.push_back({l.index, l.exponent});
    arr.push_back({{"coeff", integer_to_json(c)}, {"word", std::move(letters)}});
  }
  return arr;
}

NCPoly ncpoly_from_json(const nlohmann::json& j) {
  std::vector<NCPoly::Term> terms;
  for (const auto& t : j) {
    std::vector<Letter> letters;
    for (const auto& l : t.at("word")) letters.push_back({l.at(0).get<std::uint32_t>(), l.at(1).get<std::int32_t>()});
    terms.emplace_back(Word(letters), integer_from_json(t.at("coeff")));
  }
  return NCPoly::from_terms(std::move(terms));
}

}  // namespace nccat
