#include "qmval/parse.hpp"

#include <cctype>

namespace qmval {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {
    if (vars.empty()) throw invalid_input("empty variable list");
  }

  MPoly run() {
    MPoly result = expr();
    skip_ws();
    if (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_')
        fail("implicit multiplication is not allowed; use '*'");
      if (c == '/') fail("division by a non-constant is not allowed");
      fail(std::string("unexpected character '") + c + "'");
    }
    return result;
  }

 private:
  int nvars() const { return static_cast<int>(vars_.size()); }

  [[noreturn]] void fail(const std::string& message) const {
    throw parse_error(message, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Int uint_literal(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  MPoly expr() {
    MPoly result = term();
    while (true) {
      if (consume('+'))
        result = result + term();
      else if (consume('-'))
        result = result - term();
      else
        return result;
    }
  }

  MPoly term() {
    MPoly result = factor();
    while (consume('*')) result = result * factor();
    return result;
  }

  MPoly factor() {
    MPoly base = atom();
    if (!consume('^')) return base;
    skip_ws();
    if (peek() == '-') fail("negative exponent");
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("exponent must be a nonnegative integer");
    Int k = uint_literal("exponent");
    if (k > MPoly::kMaxExponent) fail("exponent exceeds supported range");
    return base.pow(static_cast<std::int64_t>(k));
  }

  MPoly atom() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -atom();
    }
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail("expected a rational, a variable, '(' or '-'");
  }

  MPoly rational_literal() {
    Int num = uint_literal("digits");
    Int den = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("division by a non-constant is not allowed");
      den = uint_literal("denominator");
      if (den == 0) fail("zero denominator");
    }
    return MPoly::constant(nvars(), make_rat(std::move(num), std::move(den)));
  }

  MPoly variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    std::string name(text_.substr(start, pos_ - start));
    for (int i = 0; i < nvars(); ++i)
      if (vars_[i] == name) return MPoly::variable(nvars(), i);
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  return Parser(text, vars).run();
}

}  // namespace qmval
