#include "fobnn/term.hpp"

#include <cctype>
#include <stdexcept>

namespace fobnn {

Rational parse_decimal(std::string_view text) {
  using boost::multiprecision::cpp_int;
  std::size_t i = 0;
  cpp_int digits = 0;
  int scale = 0;
  bool any = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits = digits * 10 + (text[i] - '0');
    any = true;
    ++i;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits = digits * 10 + (text[i] - '0');
      --scale;
      any = true;
      ++i;
    }
  }
  if (!any) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    if (i == text.size()) throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    int exp = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exp = exp * 10 + (text[i] - '0');
      if (exp > 4000) throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
      ++i;
    }
    scale += neg ? -exp : exp;
  }
  if (i != text.size()) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  cpp_int ten_pow = boost::multiprecision::pow(cpp_int(10), scale < 0 ? -scale : scale);
  return scale < 0 ? Rational(digits, ten_pow) : Rational(digits * ten_pow);
}

std::string format_rational(const Rational& value) {
  using boost::multiprecision::cpp_int;
  cpp_int num = boost::multiprecision::numerator(value);
  cpp_int den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  cpp_int rest = den;
  int twos = 0;
  int fives = 0;
  while (rest % 2 == 0) rest /= 2, ++twos;
  while (rest % 5 == 0) rest /= 5, ++fives;
  std::string out = negative ? "-" : "";
  if (rest != 1) return out + num.str() + "/" + den.str();

  const int places = std::max(twos, fives);
  cpp_int scaled = num * boost::multiprecision::pow(cpp_int(10), places) / den;
  std::string digits = scaled.str();
  if (places == 0) return out + digits;
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, 1, '.');
  return out + digits;
}

char op_symbol(Op op) {
  switch (op) {
    case Op::Add: return '+';
    case Op::Sub: return '-';
    case Op::Mul: return '*';
    case Op::Div: return '/';
  }
  return '?';
}

std::string AnnotatedVar::to_string() const {
  switch (kind) {
    case VarKind::Current: return base;
    case VarKind::Next: return base + "'";
    case VarKind::Dot: return "dot(" + base + ")";
    case VarKind::NextDot: return "dot(" + base + "')";
    case VarKind::Helper: return "w[" + std::to_string(index) + "]";
  }
  return base;
}

std::string Constant::to_string() const {
  if (name) return *name;
  return value ? format_rational(*value) : "?";
}

Term Term::binary(Op op, Term lhs, Term rhs) {
  return Term(Node{BinaryNode{op, std::make_shared<const Term>(std::move(lhs)),
                              std::make_shared<const Term>(std::move(rhs))}});
}

namespace {

constexpr int kAdditive = 1;
constexpr int kMultiplicative = 2;
constexpr int kAtomic = 3;

int precedence(Op op) { return op == Op::Add || op == Op::Sub ? kAdditive : kMultiplicative; }

bool is_negation(const BinaryNode& b) {
  return b.op == Op::Sub && b.lhs->is_constant() && b.lhs->as_constant().is_literal_zero();
}

struct Rendered {
  std::string text;
  int prec;
};

Rendered render(const Term& t) {
  if (t.is_var()) return {t.as_var().to_string(), kAtomic};
  if (t.is_constant()) return {t.as_constant().to_string(), kAtomic};
  const auto& b = t.as_binary();
  auto wrap = [](const Rendered& r, bool parens) { return parens ? "(" + r.text + ")" : r.text; };
  if (is_negation(b)) {
    Rendered inner = render(*b.rhs);
    return {"-" + wrap(inner, inner.prec < kMultiplicative), kAdditive};
  }
  const int p = precedence(b.op);
  Rendered l = render(*b.lhs);
  Rendered r = render(*b.rhs);
  std::string sep = p == kAdditive ? std::string(" ") + op_symbol(b.op) + " " : std::string(1, op_symbol(b.op));
  return {wrap(l, l.prec < p) + sep + wrap(r, r.prec <= p), p};
}

}  // namespace

std::string Term::to_string() const { return render(*this).text; }

Term Term::primed() const {
  if (is_var()) {
    const auto& v = as_var();
    return v.kind == VarKind::Current ? var(AnnotatedVar::next(v.base)) : *this;
  }
  if (is_constant()) return *this;
  const auto& b = as_binary();
  return binary(b.op, b.lhs->primed(), b.rhs->primed());
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_.index() != b.node_.index()) return false;
  if (a.is_var()) return a.as_var() == b.as_var();
  if (a.is_constant()) return a.as_constant() == b.as_constant();
  const auto& x = a.as_binary();
  const auto& y = b.as_binary();
  return x.op == y.op && *x.lhs == *y.lhs && *x.rhs == *y.rhs;
}

Term operator+(Term a, Term b) { return Term::binary(Op::Add, std::move(a), std::move(b)); }
Term operator-(Term a, Term b) { return Term::binary(Op::Sub, std::move(a), std::move(b)); }
Term operator*(Term a, Term b) { return Term::binary(Op::Mul, std::move(a), std::move(b)); }
Term operator/(Term a, Term b) { return Term::binary(Op::Div, std::move(a), std::move(b)); }

}  // namespace fobnn
