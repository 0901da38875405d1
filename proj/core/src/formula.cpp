#include "formula.hpp"

#include <cctype>

namespace lierep::detail {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::map<char, Rational>& vars) : text_(text), vars_(vars) {}

  Rational parse() {
    Rational v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("formula \"" + std::string(text_) + "\": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Rational expression() {
    Rational v = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Rational rhs = term();
      if (c == '+')
        v += rhs;
      else
        v -= rhs;
    }
    return v;
  }

  // Products, quotients and juxtaposition: "n(n+1)/2", "3a".
  Rational term() {
    Rational v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*' || c == '/') {
        ++pos_;
        Rational rhs = unary();
        if (c == '/') {
          if (rhs == 0) fail("division by zero");
          v /= rhs;
        } else {
          v *= rhs;
        }
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  Rational unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Rational power() {
    Rational base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer literal");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Rational r = 1;
      for (int k = 0; k < e; ++k) r *= base;
      return r;
    }
    return base;
  }

  Rational primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Rational v = expression();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      const auto it = vars_.find(c);
      if (it == vars_.end()) fail("unbound variable '" + std::string(1, c) + "'");
      return it->second;
    }
    fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::map<char, Rational>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational evaluate_formula(std::string_view text, const std::map<char, Rational>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace lierep::detail
