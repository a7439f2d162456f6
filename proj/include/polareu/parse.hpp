#pragma once

#include <cctype>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace polareu {

namespace detail {

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
template <Field F>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const PolyRing<F>& ring,
                   std::span<const std::string> names)
      : text_(text), ring_(ring), names_(names) {}

  Polynomial<F> parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial<F> p = expr();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] +
                           "' (multiplication needs an explicit '*')",
                       pos_);
    }
    return p;
  }

 private:
  Polynomial<F> expr() {
    Polynomial<F> acc = term();
    for (;;) {
      skip_space();
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = unary();
    for (;;) {
      skip_space();
      if (!accept('*')) return acc;
      acc *= unary();
    }
  }

  Polynomial<F> unary() {
    skip_space();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial<F> power() {
    Polynomial<F> base = atom();
    skip_space();
    if (!accept('^')) return base;
    skip_space();
    std::size_t start = pos_;
    std::string digits = integer_literal();
    if (digits.size() > 4) throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(std::stoul(digits)));
  }

  Polynomial<F> atom() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (accept('(')) {
      Polynomial<F> inner = expr();
      skip_space();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return Polynomial<F>::constant(ring_, ring_.field.from_decimal(integer_literal()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == ident) return Polynomial<F>::variable(ring_, i);
      }
      throw ParseError("unknown variable '" + std::string(ident) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer literal", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  const PolyRing<F>& ring_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` into a polynomial of `ring`; variable i is named names[i].
template <Field F>
Polynomial<F> parse_polynomial(std::string_view text, const PolyRing<F>& ring,
                               std::span<const std::string> names) {
  if (names.size() != ring.nvars) throw InvalidInput("variable list does not match ring size");
  return detail::PolynomialParser<F>(text, ring, names).parse();
}

/// Rejects empty, malformed or duplicate variable names.
inline void validate_variable_names(std::span<const std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto& n = names[i];
    bool ok = !n.empty() && std::isalpha(static_cast<unsigned char>(n[0]));
    for (char c : n) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    if (!ok) throw InvalidInput("invalid variable name '" + n + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[j] == n) throw InvalidInput("duplicate variable name '" + n + "'");
    }
  }
}

}  // namespace polareu
