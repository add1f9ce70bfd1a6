#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace fobnn {

using Rational = boost::multiprecision::cpp_rational;

/// Parses an unsigned decimal literal such as `2`, `0.1` or `1.5e-3` exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_decimal(std::string_view text);

/// Exact decimal rendering when the denominator only has factors 2 and 5,
/// `n/d` otherwise.
std::string format_rational(const Rational& value);

enum class Op : std::uint8_t { Add, Sub, Mul, Div };

char op_symbol(Op op);

enum class VarKind : std::uint8_t { Current, Next, Dot, NextDot, Helper };

// A variable of the FOBNN vocabulary. Helpers carry their number in `index`
// and an empty base name.
struct AnnotatedVar {
  std::string base;
  VarKind kind = VarKind::Current;
  std::uint32_t index = 0;

  static AnnotatedVar current(std::string name) { return {std::move(name), VarKind::Current, 0}; }
  static AnnotatedVar next(std::string name) { return {std::move(name), VarKind::Next, 0}; }
  static AnnotatedVar dot(std::string name) { return {std::move(name), VarKind::Dot, 0}; }
  static AnnotatedVar next_dot(std::string name) { return {std::move(name), VarKind::NextDot, 0}; }
  static AnnotatedVar helper(std::uint32_t n) { return {{}, VarKind::Helper, n}; }

  bool is_state() const { return kind == VarKind::Current || kind == VarKind::Next; }

  /// `X`, `X'`, `dot(X)`, `dot(X')`, `w[7]`.
  std::string to_string() const;

  auto operator<=>(const AnnotatedVar&) const = default;
  bool operator==(const AnnotatedVar&) const = default;
};

/// A constant symbol. Named constants without a value are symbolic and
/// strictly positive; otherwise the value's sign is the constant's sign.
struct Constant {
  std::optional<std::string> name;
  std::optional<Rational> value;

  static Constant number(Rational v) { return {std::nullopt, std::move(v)}; }
  static Constant symbolic(std::string n) { return {std::move(n), std::nullopt}; }
  static Constant named(std::string n, Rational v) { return {std::move(n), std::move(v)}; }

  bool is_literal_zero() const { return !name && value && value->is_zero(); }
  std::string to_string() const;

  bool operator==(const Constant&) const = default;
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct BinaryNode {
  Op op;
  TermPtr lhs;
  TermPtr rhs;
};

/// Immutable arithmetic term. Subtrees may be shared in memory but every
/// occurrence is a distinct node as far as the encoding is concerned.
class Term {
 public:
  using Node = std::variant<AnnotatedVar, Constant, BinaryNode>;

  static Term var(AnnotatedVar v) { return Term(Node{std::move(v)}); }
  static Term constant(Constant c) { return Term(Node{std::move(c)}); }
  static Term number(Rational v) { return constant(Constant::number(std::move(v))); }
  static Term binary(Op op, Term lhs, Term rhs);
  static Term negate(Term t) { return binary(Op::Sub, number(0), std::move(t)); }

  const Node& node() const { return node_; }

  bool is_var() const { return std::holds_alternative<AnnotatedVar>(node_); }
  bool is_constant() const { return std::holds_alternative<Constant>(node_); }
  bool is_binary() const { return std::holds_alternative<BinaryNode>(node_); }

  const AnnotatedVar& as_var() const { return std::get<AnnotatedVar>(node_); }
  const Constant& as_constant() const { return std::get<Constant>(node_); }
  const BinaryNode& as_binary() const { return std::get<BinaryNode>(node_); }

  /// Infix rendering that re-parses to the same tree.
  std::string to_string() const;

  /// Replaces every Current variable with its Next counterpart.
  Term primed() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(Node node) : node_(std::move(node)) {}
  Node node_;
};

Term operator+(Term a, Term b);
Term operator-(Term a, Term b);
Term operator*(Term a, Term b);
Term operator/(Term a, Term b);

}  // namespace fobnn
