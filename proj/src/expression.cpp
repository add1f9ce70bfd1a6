#include "fobnn/expression.hpp"

#include <cctype>

namespace fobnn {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const IdentifierResolver& resolve, int line, int offset)
      : text_(text), resolve_(resolve), line_(line), offset_(offset) {}

  Term parse() {
    Term t = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(msg, line_, offset_ + static_cast<int>(pos_) + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term expr() {
    Term acc = accept('-') ? Term::negate(term()) : term();
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Term term() {
    Term acc = factor();
    for (;;) {
      if (accept('*')) acc = acc * factor();
      else if (accept('/')) acc = acc / factor();
      else return acc;
    }
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Term resolve(std::string_view name, bool primed, std::size_t at) {
    try {
      return resolve_(name, primed);
    } catch (const InputError& e) {
      pos_ = at;
      fail(e.what());
    }
  }

  Term factor() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return Term::negate(factor());
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        ++pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      try {
        return Term::number(parse_decimal(text_.substr(start, pos_ - start)));
      } catch (const std::invalid_argument& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      std::string_view name = identifier();
      if (accept('(')) {
        if (name != "dot") {
          pos_ = start;
          fail("unsupported function '" + std::string(name) + "'");
        }
        skip_space();
        const std::size_t inner_start = pos_;
        std::string_view inner = identifier();
        if (inner.empty()) fail("expected species name");
        const bool primed = accept('\'');
        if (!accept(')')) fail("expected ')'");
        return resolve("dot(" + std::string(inner) + ")", primed, inner_start);
      }
      const bool primed = pos_ < text_.size() && text_[pos_] == '\'';
      if (primed) ++pos_;
      return resolve(name, primed, start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const IdentifierResolver& resolve_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_expression(std::string_view text, const IdentifierResolver& resolve, int line,
                      int column_offset) {
  return ExpressionParser(text, resolve, line, column_offset).parse();
}

}  // namespace fobnn
