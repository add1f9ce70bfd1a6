#include "fobnn/expression.hpp"
#include "fobnn/sign.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace fobnn;

namespace {

Term X() { return Term::var(AnnotatedVar::current("X")); }
Term Y() { return Term::var(AnnotatedVar::current("Y")); }

std::set<std::tuple<Sign, Sign, Sign>> table(Op op) {
  std::set<std::tuple<Sign, Sign, Sign>> out;
  for (const auto& t : sign_relation(op)) out.emplace(t.lhs, t.rhs, t.result);
  return out;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("sign of rationals") {
  CHECK(sign_of(parse_decimal("2.3") * -1) == Sign::Neg);
  CHECK(sign_of(Rational(0)) == Sign::Zero);
  CHECK(sign_of(parse_decimal("0.1")) == Sign::Pos);
  CHECK(sign_of(Constant::symbolic("k")) == Sign::Pos);
  CHECK(std::string(to_string(Sign::Neg)) == "-");
}

TEST_CASE("relation sizes") {
  CHECK(table(Op::Add).size() == 13);
  CHECK(table(Op::Sub).size() == 13);
  CHECK(table(Op::Mul).size() == 9);
  CHECK(table(Op::Div).size() == 6);
  for (const auto& [a, b, c] : table(Op::Div)) CHECK(b != Sign::Zero);
}

TEST_CASE("abstract_apply matches the relation image on all 27 triples") {
  for (Op op : {Op::Add, Op::Sub, Op::Mul, Op::Div}) {
    const auto rel = table(op);
    for (Sign a : kAllSigns)
      for (Sign b : kAllSigns) {
        const SignSet img = abstract_apply(op, a, b);
        for (Sign c : kAllSigns) CHECK(img.contains(c) == rel.contains({a, b, c}));
      }
  }
  CHECK(abstract_apply(Op::Add, Sign::Pos, Sign::Neg) == SignSet::all());
  CHECK(abstract_apply(Op::Sub, Sign::Pos, Sign::Pos) == SignSet::all());
  CHECK(abstract_apply(Op::Mul, Sign::Zero, Sign::Pos) == SignSet{Sign::Zero});
  CHECK(abstract_apply(Op::Div, Sign::Pos, Sign::Zero).empty());
  for (Op op : {Op::Mul, Op::Div})
    for (Sign a : kAllSigns)
      for (Sign b : {Sign::Pos, Sign::Neg}) CHECK(abstract_apply(op, a, b).size() == 1);
}

TEST_CASE("relations are sound on random rationals") {
  std::mt19937 rng(7);
  for (Op op : {Op::Add, Op::Sub, Op::Mul, Op::Div}) {
    const auto rel = table(op);
    for (int i = 0; i < 10000; ++i) {
      const Rational x = random_rational(rng);
      Rational y = random_rational(rng);
      if (op == Op::Div && y == 0) y = 1;
      Rational r;
      switch (op) {
        case Op::Add: r = x + y; break;
        case Op::Sub: r = x - y; break;
        case Op::Mul: r = x * y; break;
        case Op::Div: r = x / y; break;
      }
      CHECK(rel.contains({sign_of(x), sign_of(y), sign_of(r)}));
    }
  }
}

TEST_CASE("relations are minimal") {
  // every triple has a rational witness
  std::mt19937 rng(11);
  for (Op op : {Op::Add, Op::Sub, Op::Mul, Op::Div}) {
    std::set<std::tuple<Sign, Sign, Sign>> seen;
    for (int i = 0; i < 20000; ++i) {
      const Rational x = random_rational(rng);
      const Rational y = random_rational(rng);
      if (op == Op::Div && y == 0) continue;
      Rational r;
      switch (op) {
        case Op::Add: r = x + y; break;
        case Op::Sub: r = x - y; break;
        case Op::Mul: r = x * y; break;
        case Op::Div: r = x / y; break;
      }
      seen.emplace(sign_of(x), sign_of(y), sign_of(r));
    }
    CHECK(seen == table(op));
  }
}

TEST_CASE("term evaluation") {
  SignAssignment a;
  a.bind(AnnotatedVar::current("E"), Sign::Zero);
  a.bind(AnnotatedVar::current("S"), Sign::Pos);
  const Term t = Term::number(parse_decimal("0.1")) * Term::var(AnnotatedVar::current("E")) *
                 Term::var(AnnotatedVar::current("S"));
  CHECK(eval_term(t, a) == SignSet{Sign::Zero});

  SignAssignment b;
  b.bind(AnnotatedVar::current("X"), Sign::Neg);
  CHECK(eval_term(X(), b) == SignSet{Sign::Neg});
  CHECK_THROWS_AS(eval_term(Y(), b), std::out_of_range);

  b.bind(AnnotatedVar::current("X"), Sign::Pos);
  b.bind(AnnotatedVar::current("Y"), Sign::Neg);
  CHECK(eval_term((X() + Y()) * (X() + Y()), b) == SignSet::all());
}

TEST_CASE("formula evaluation") {
  SignAssignment a;
  a.bind(AnnotatedVar::current("X"), Sign::Pos);
  a.bind(AnnotatedVar::current("Y"), Sign::Neg);
  const auto sharing = Formula::equal((X() + Y()) * (X() + Y()), Term::negate(Term::number(1)));
  CHECK(eval_formula(*sharing, a));
  CHECK(eval_formula(*Formula::equal(X(), X()), a));

  // dot(C) = k_on*S*E - k_off*C at the all-zero state
  SignAssignment z;
  for (const char* s : {"S", "E", "C"}) z.bind(AnnotatedVar::current(s), Sign::Zero);
  z.bind(AnnotatedVar::dot("C"), Sign::Zero);
  auto k = [](const char* n) { return Term::constant(Constant::symbolic(n)); };
  auto v = [](const char* n) { return Term::var(AnnotatedVar::current(n)); };
  const auto ode = Formula::equal(Term::var(AnnotatedVar::dot("C")), k("k_on") * v("S") * v("E") - k("k_off") * v("C"));
  CHECK(eval_formula(*ode, z));

  // exists w. w*w = -1 has no witness; exists w. w*w = 1 has one
  const AnnotatedVar w = AnnotatedVar::helper(1);
  const Term ww = Term::var(w) * Term::var(w);
  CHECK_FALSE(eval_formula(*Formula::exists(w, Formula::equal(ww, Term::negate(Term::number(1)))), a));
  CHECK(eval_formula(*Formula::exists(w, Formula::equal(ww, Term::number(1))), a));
  CHECK(eval_formula(*Formula::forall(w, Formula::nonnegative(ww)), a));
  CHECK_FALSE(eval_formula(*Formula::forall(w, Formula::nonnegative(Term::var(w))), a));
  CHECK(eval_formula(*Formula::disjunction({Formula::negation(Formula::nonnegative(Y())), Formula::nonnegative(X())}), a));
  CHECK_FALSE(eval_formula(*Formula::conjunction({Formula::nonnegative(Y()), Formula::nonnegative(X())}), a));
}
