#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "longknot/laurent.hpp"

namespace longknot {

/// Renders `3*t^4 + 15/2*t^2 + 3`: terms in decreasing graded-lex order,
/// coefficient then `*`, negative real coefficients pulled into the sign.
template <Coefficient K>
std::string render(const LaurentPoly<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : p.terms()) {
    K c = term.coeff;
    bool negative = is_negative_real(c);
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      int e = term.exponents[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += kVarNames[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.to_string() + "*" + mono;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, Variables vars) : text_(text), vars_(vars) {}

  template <Coefficient K>
  LaurentPoly<K> parse() {
    std::vector<typename LaurentPoly<K>::Term> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
      skip_space();
    }
    while (true) {
      auto term = parse_term<K>();
      if (negate) term.coeff = -term.coeff;
      terms.push_back(std::move(term));
      skip_space();
      if (at_end()) break;
      char c = get();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', got '") + c + "'");
      negate = c == '-';
      skip_space();
    }
    return LaurentPoly<K>::from_terms(vars_, std::move(terms));
  }

 private:
  template <Coefficient K>
  typename LaurentPoly<K>::Term parse_term() {
    typename LaurentPoly<K>::Term term{Exponents{}, K(1)};
    while (true) {
      skip_space();
      if (at_end()) fail("expected a factor");
      char c = peek();
      if (c == '(') {
        std::size_t close = text_.find(')', pos_);
        if (close == std::string_view::npos) fail("unclosed '('");
        term.coeff = term.coeff * parse_coeff<K>(text_.substr(pos_, close - pos_ + 1));
        pos_ = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        if (!at_end() && peek() == 'i') ++pos_;
        term.coeff = term.coeff * parse_coeff<K>(text_.substr(start, pos_ - start));
      } else if (c == 'i') {
        ++pos_;
        term.coeff = term.coeff * parse_coeff<K>("i");
      } else if (auto v = var_from_name(std::string_view(&text_[pos_], 1))) {
        if (!vars_.contains(*v)) fail(std::string("variable '") + c + "' not in " + vars_.to_string());
        ++pos_;
        std::int64_t e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_space();
          e = parse_exponent();
        }
        int idx = static_cast<int>(*v);
        term.exponents[idx] = checked_exponent(term.exponents[idx] + e);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return term;
  }

  template <Coefficient K>
  K parse_coeff(std::string_view lit) {
    try {
      return K::parse(lit);
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  std::int64_t parse_exponent() {
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) neg = get() == '-';
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected exponent digits");
    if (pos_ - start > 10) fail("exponent too large");
    std::int64_t v = std::stoll(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + msg, 1, pos_ + 1);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  Variables vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the grammar produced by `render`.
template <Coefficient K>
LaurentPoly<K> parse_laurent(std::string_view text, Variables vars) {
  return detail::PolyParser(text, vars).parse<K>();
}

}  // namespace longknot
