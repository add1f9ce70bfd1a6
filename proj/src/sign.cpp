#include "fobnn/sign.hpp"

#include <stdexcept>

namespace fobnn {

namespace {

constexpr Sign P = Sign::Pos;
constexpr Sign N = Sign::Neg;
constexpr Sign Z = Sign::Zero;

// Mixed-sign sums are the only indefinite cases.
constexpr SignTriple kAdd[] = {
    {P, P, P}, {P, Z, P}, {Z, P, P}, {Z, Z, Z}, {N, N, N}, {N, Z, N}, {Z, N, N},
    {P, N, P}, {P, N, N}, {P, N, Z}, {N, P, P}, {N, P, N}, {N, P, Z},
};

// a - b read as a + (-b).
constexpr SignTriple kSub[] = {
    {P, Z, P}, {P, N, P}, {Z, P, N}, {Z, Z, Z}, {Z, N, P}, {N, P, N}, {N, Z, N},
    {P, P, P}, {P, P, N}, {P, P, Z}, {N, N, P}, {N, N, N}, {N, N, Z},
};

constexpr SignTriple kMul[] = {
    {P, P, P}, {P, N, N}, {P, Z, Z}, {N, P, N}, {N, N, P},
    {N, Z, Z}, {Z, P, Z}, {Z, N, Z}, {Z, Z, Z},
};

constexpr SignTriple kDiv[] = {
    {P, P, P}, {P, N, N}, {N, P, N}, {N, N, P}, {Z, P, Z}, {Z, N, Z},
};

}  // namespace

const char* to_string(Sign s) {
  switch (s) {
    case Sign::Pos: return "+";
    case Sign::Neg: return "-";
    case Sign::Zero: return "0";
  }
  return "?";
}

Sign parse_sign(char c) {
  switch (c) {
    case '+': return Sign::Pos;
    case '-': return Sign::Neg;
    case '0': return Sign::Zero;
    default: throw std::invalid_argument(std::string("not a sign: '") + c + "'");
  }
}

Sign sign_of(const Rational& x) {
  if (x > 0) return Sign::Pos;
  if (x < 0) return Sign::Neg;
  return Sign::Zero;
}

Sign sign_of(const Constant& c) { return c.value ? sign_of(*c.value) : Sign::Pos; }

std::string SignSet::to_string() const {
  std::string out = "{";
  for (Sign s : kAllSigns) {
    if (!contains(s)) continue;
    if (out.size() > 1) out += ",";
    out += fobnn::to_string(s);
  }
  return out + "}";
}

std::span<const SignTriple> sign_relation(Op op) {
  switch (op) {
    case Op::Add: return kAdd;
    case Op::Sub: return kSub;
    case Op::Mul: return kMul;
    case Op::Div: return kDiv;
  }
  return {};
}

SignSet abstract_apply(Op op, Sign s1, Sign s2) {
  SignSet out;
  for (const auto& t : sign_relation(op)) {
    if (t.lhs == s1 && t.rhs == s2) out.insert(t.result);
  }
  return out;
}

SignSet abstract_apply(Op op, SignSet s1, SignSet s2) {
  SignSet out;
  for (const auto& t : sign_relation(op)) {
    if (s1.contains(t.lhs) && s2.contains(t.rhs)) out.insert(t.result);
  }
  return out;
}

Sign SignAssignment::at(const AnnotatedVar& v) const {
  auto it = bindings_.find(v);
  if (it == bindings_.end()) throw std::out_of_range("unbound variable " + v.to_string());
  return it->second;
}

SignSet eval_term(const Term& t, const SignAssignment& alpha) {
  if (t.is_var()) return SignSet{alpha.at(t.as_var())};
  if (t.is_constant()) return SignSet{sign_of(t.as_constant())};
  const auto& b = t.as_binary();
  // Each occurrence is evaluated on its own; equal siblings are not merged.
  return abstract_apply(b.op, eval_term(*b.lhs, alpha), eval_term(*b.rhs, alpha));
}

FormulaPtr Formula::equal(Term lhs, Term rhs) {
  return FormulaPtr(new Formula(Equal{std::move(lhs), std::move(rhs)}));
}
FormulaPtr Formula::nonnegative(Term t) { return FormulaPtr(new Formula(NonNegative{std::move(t)})); }
FormulaPtr Formula::negation(FormulaPtr f) { return FormulaPtr(new Formula(Not{std::move(f)})); }
FormulaPtr Formula::conjunction(std::vector<FormulaPtr> parts) {
  return FormulaPtr(new Formula(And{std::move(parts)}));
}
FormulaPtr Formula::disjunction(std::vector<FormulaPtr> parts) {
  return FormulaPtr(new Formula(Or{std::move(parts)}));
}
FormulaPtr Formula::exists(AnnotatedVar v, FormulaPtr body) {
  return FormulaPtr(new Formula(Exists{std::move(v), std::move(body)}));
}
FormulaPtr Formula::forall(AnnotatedVar v, FormulaPtr body) {
  return FormulaPtr(new Formula(Forall{std::move(v), std::move(body)}));
}

namespace {

bool eval(const Formula& f, SignAssignment& alpha);

template <bool Universal>
bool eval_quantified(const AnnotatedVar& v, const Formula& body, SignAssignment& alpha) {
  std::optional<Sign> saved;
  if (alpha.contains(v)) saved = alpha.at(v);
  bool result = Universal;
  for (Sign s : kAllSigns) {
    alpha.bind(v, s);
    if (eval(body, alpha) != Universal) {
      result = !Universal;
      break;
    }
  }
  if (saved) alpha.bind(v, *saved);
  else alpha.unbind(v);
  return result;
}

bool eval(const Formula& f, SignAssignment& alpha) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Equal>) {
          return !(eval_term(n.lhs, alpha) & eval_term(n.rhs, alpha)).empty();
        } else if constexpr (std::is_same_v<T, Formula::NonNegative>) {
          return !(eval_term(n.term, alpha) & SignSet::nonnegative()).empty();
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          return !eval(*n.body, alpha);
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          for (const auto& p : n.parts)
            if (!eval(*p, alpha)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          for (const auto& p : n.parts)
            if (eval(*p, alpha)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Formula::Exists>) {
          return eval_quantified<false>(n.var, *n.body, alpha);
        } else {
          return eval_quantified<true>(n.var, *n.body, alpha);
        }
      },
      f.node());
}

}  // namespace

bool eval_formula(const Formula& f, const SignAssignment& alpha) {
  SignAssignment scratch = alpha;
  return eval(f, scratch);
}

}  // namespace fobnn
