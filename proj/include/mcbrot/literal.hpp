#pragma once

#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mcbrot/multicomplex.hpp"
#include "mcbrot/unit.hpp"

namespace mcbrot {

// Multicomplex literal grammar (whitespace ignored):
//   literal := sign? term (('+'|'-') term)*
//   term    := number ('*'? unit)? | unit
//   unit    := ('i' digit+)+
//   number  := decimal with optional sign and exponent
// A bare unit means coefficient 1, a bare number is the real part, repeated
// units in one literal are summed. A unit token with repeated basic factors
// (e.g. "i1i1") reduces through the algebra (i1i1 == -1).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, int order) : text_(text), order_(order) {}

  Multicomplex parse() {
    Multicomplex out(order_);
    skip_ws();
    if (done()) throw ParseError("empty literal", pos_);
    double sign = parse_sign_run();
    parse_term(out, sign);
    skip_ws();
    while (!done()) {
      const std::size_t at = pos_;
      char c = text_[pos_];
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-' between terms", at);
      ++pos_;
      skip_ws();
      double s = (c == '-') ? -1.0 : 1.0;
      s *= parse_sign_run();
      if (done()) throw ParseError("dangling sign", at);
      parse_term(out, s);
      skip_ws();
    }
    return out;
  }

  // Parses a lone canonical unit token ("1" is accepted for the real unit).
  static UnitIndex parse_unit_token(std::string_view token) {
    LiteralParser p(token, 24);
    p.skip_ws();
    if (p.done()) throw ParseError("empty unit", 0);
    UnitIndex u;
    if (p.text_[p.pos_] == '1') {
      ++p.pos_;
    } else {
      const auto su = p.parse_unit();
      if (su.sign != 1) throw ParseError("not a canonical unit (repeated factor)", 0);
      u = su.unit;
    }
    p.skip_ws();
    if (!p.done()) throw ParseError("trailing characters after unit", p.pos_);
    return u;
  }

 private:
  bool done() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // Consumes at most one leading sign; a number's own sign is handled by the
  // number parser.
  double parse_sign_run() {
    if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) {
      const double s = text_[pos_] == '-' ? -1.0 : 1.0;
      ++pos_;
      skip_ws();
      return s;
    }
    return 1.0;
  }

  void parse_term(Multicomplex& out, double sign) {
    skip_ws();
    const std::size_t at = pos_;
    bool have_number = false;
    double value = 1.0;
    if (peek_number()) {
      value = parse_number();
      have_number = true;
      skip_ws();
      if (!done() && text_[pos_] == '*') {
        ++pos_;
        skip_ws();
        if (done() || text_[pos_] != 'i') throw ParseError("expected unit after '*'", pos_);
      }
    }
    if (!done() && text_[pos_] == 'i') {
      const auto su = parse_unit();
      out.coeff(su.unit) += sign * su.sign * value;
      return;
    }
    if (!have_number) throw ParseError("expected number or unit", at);
    out.coeff(UnitIndex{0}) += sign * value;
  }

  bool peek_number() const {
    if (done()) return false;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return true;
    if ((c == '+' || c == '-') && pos_ + 1 < text_.size()) {
      const char d = text_[pos_ + 1];
      return std::isdigit(static_cast<unsigned char>(d)) || d == '.';
    }
    return false;
  }

  double parse_number() {
    const std::size_t start = pos_;
    if (text_[pos_] == '+' || text_[pos_] == '-') ++pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (!done() && text_[pos_] == '.') {
      ++pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    if (!done() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (!done() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        pos_ = mark;  // not an exponent after all
      } else {
        while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    // from_chars rejects a leading '+'; skip it.
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw ParseError("malformed number", start);
    return value;
  }

  // ('i' digit+)+; repeated factors reduce via unit_product.
  SignedUnit parse_unit() {
    SignedUnit acc{1, UnitIndex{0}};
    const std::size_t at = pos_;
    while (!done() && text_[pos_] == 'i') {
      ++pos_;
      const std::size_t dstart = pos_;
      while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected digits after 'i'", dstart);
      unsigned long j = 0;
      const auto [ptr, ec] = std::from_chars(text_.data() + dstart, text_.data() + pos_, j);
      (void)ptr;
      if (ec != std::errc{} || j == 0) throw ParseError("malformed unit index", dstart);
      if (static_cast<int>(j) > order_)
        throw ParseError("unit i" + std::to_string(j) + " exceeds order " + std::to_string(order_),
                         dstart);
      const auto su = unit_product(acc.unit, UnitIndex{1u << (j - 1)});
      acc.unit = su.unit;
      acc.sign *= su.sign;
    }
    if (pos_ == at) throw ParseError("expected unit", at);
    return acc;
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

inline std::string format_scalar(double x) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "0";
  return std::string(buf, ptr);
}

}  // namespace detail

inline Multicomplex parse_literal(std::string_view text, int order) {
  return detail::LiteralParser(text, order).parse();
}

// Emits units in ascending mask order, dropping zero terms; mutually inverse
// with parse_literal up to term ordering (parse(format(a)) == a exactly,
// since scalars print in shortest round-trip form).
inline std::string format_literal(const Multicomplex& a) {
  std::string out;
  for (std::size_t m = 0; m < a.size(); ++m) {
    const double x = a[m];
    if (x == 0.0) continue;
    const bool first = out.empty();
    const double mag = x < 0.0 ? -x : x;
    if (first) {
      if (x < 0.0) out += '-';
    } else {
      out += (x < 0.0) ? " - " : " + ";
    }
    const UnitIndex u{static_cast<std::uint32_t>(m)};
    if (is_real_unit(u)) {
      out += detail::format_scalar(mag);
    } else if (mag == 1.0) {
      out += unit_name(u);
    } else {
      out += detail::format_scalar(mag);
      out += '*';
      out += unit_name(u);
    }
  }
  if (out.empty()) return "0";
  return out;
}

// "i1,i2,i1i2" -> three units; "1" names the real unit.
inline std::array<UnitIndex, 3> parse_triple_units(std::string_view text) {
  std::array<UnitIndex, 3> units;
  std::size_t start = 0;
  int count = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      if (count >= 3) throw ParseError("expected exactly three units", i);
      units[count++] = detail::LiteralParser::parse_unit_token(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (count != 3) throw ParseError("expected exactly three units", text.size());
  return units;
}

// Smallest order whose I(n) contains every unit in the list.
inline int min_order_for_units(const std::array<UnitIndex, 3>& units) {
  int order = 1;
  for (const auto& u : units) {
    for (int j = 31; j >= 0; --j) {
      if (u.mask & (1u << j)) {
        if (j + 1 > order) order = j + 1;
        break;
      }
    }
  }
  return order;
}

}  // namespace mcbrot
