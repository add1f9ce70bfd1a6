#pragma once

// Sign domain {+, -, 0}: set-valued term semantics and a first-order
// evaluator that serves as the reference semantics for everything built on
// top of it.

#include "fobnn/term.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace fobnn {

enum class Sign : std::uint8_t { Zero = 0, Pos = 1, Neg = 2 };

inline constexpr std::array<Sign, 3> kAllSigns{Sign::Pos, Sign::Neg, Sign::Zero};

/// "+", "-", "0".
const char* to_string(Sign s);

/// Accepts '+', '-', '0'. Throws std::invalid_argument otherwise.
Sign parse_sign(char c);

Sign sign_of(const Rational& x);
Sign sign_of(const Constant& c);

class SignSet {
 public:
  constexpr SignSet() = default;
  constexpr SignSet(std::initializer_list<Sign> signs) {
    for (Sign s : signs) insert(s);
  }

  static constexpr SignSet all() { return SignSet{Sign::Pos, Sign::Neg, Sign::Zero}; }
  static constexpr SignSet nonnegative() { return SignSet{Sign::Pos, Sign::Zero}; }

  constexpr void insert(Sign s) { bits_ |= bit(s); }
  constexpr bool contains(Sign s) const { return (bits_ & bit(s)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }

  constexpr SignSet operator|(SignSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr SignSet operator&(SignSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr bool operator==(const SignSet&) const = default;

  std::string to_string() const;

 private:
  static constexpr std::uint8_t bit(Sign s) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(s)); }
  static constexpr SignSet from_bits(std::uint8_t b) {
    SignSet s;
    s.bits_ = b;
    return s;
  }
  std::uint8_t bits_ = 0;
};

struct SignTriple {
  Sign lhs;
  Sign rhs;
  Sign result;
  bool operator==(const SignTriple&) const = default;
};

/// Minimal sound relation of an operator over signs.
std::span<const SignTriple> sign_relation(Op op);

/// {s | (s1, s2, s) in relation(op)}. Division by zero yields the empty set.
SignSet abstract_apply(Op op, Sign s1, Sign s2);

/// Relational image of two sets.
SignSet abstract_apply(Op op, SignSet s1, SignSet s2);

class SignAssignment {
 public:
  SignAssignment() = default;

  void bind(const AnnotatedVar& v, Sign s) { bindings_[v] = s; }
  void unbind(const AnnotatedVar& v) { bindings_.erase(v); }
  bool contains(const AnnotatedVar& v) const { return bindings_.count(v) != 0; }

  /// Throws std::out_of_range naming the variable when unbound.
  Sign at(const AnnotatedVar& v) const;

  const std::map<AnnotatedVar, Sign>& bindings() const { return bindings_; }

 private:
  std::map<AnnotatedVar, Sign> bindings_;
};

SignSet eval_term(const Term& t, const SignAssignment& alpha);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// First-order formula over sign terms. `t >= 0` is primitive.
class Formula {
 public:
  struct Equal { Term lhs, rhs; };
  struct NonNegative { Term term; };
  struct Not { FormulaPtr body; };
  struct And { std::vector<FormulaPtr> parts; };
  struct Or { std::vector<FormulaPtr> parts; };
  struct Exists { AnnotatedVar var; FormulaPtr body; };
  struct Forall { AnnotatedVar var; FormulaPtr body; };
  using Node = std::variant<Equal, NonNegative, Not, And, Or, Exists, Forall>;

  static FormulaPtr equal(Term lhs, Term rhs);
  static FormulaPtr nonnegative(Term t);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr conjunction(std::vector<FormulaPtr> parts);
  static FormulaPtr disjunction(std::vector<FormulaPtr> parts);
  static FormulaPtr exists(AnnotatedVar v, FormulaPtr body);
  static FormulaPtr forall(AnnotatedVar v, FormulaPtr body);

  const Node& node() const { return node_; }

 private:
  explicit Formula(Node n) : node_(std::move(n)) {}
  Node node_;
};

/// Truth of `f` under `alpha`. Quantifiers range over all three signs.
bool eval_formula(const Formula& f, const SignAssignment& alpha);

}  // namespace fobnn
