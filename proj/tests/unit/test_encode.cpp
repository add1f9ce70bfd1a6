#include "corpus.hpp"
#include "fobnn/encode.hpp"
#include "fobnn/sat_backend.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace fobnn;

namespace {

Term var(const char* n) { return Term::var(AnnotatedVar::current(n)); }
Term sym(const char* n) { return Term::constant(Constant::symbolic(n)); }

bool satisfies(const std::vector<Clause>& clauses, const std::vector<bool>& model) {
  for (const auto& c : clauses) {
    bool sat = false;
    for (int lit : c) sat |= model[static_cast<std::size_t>(std::abs(lit))] == (lit > 0);
    if (!sat) return false;
  }
  return true;
}

Sign decode(const std::vector<bool>& m, VarPair p) {
  return m[static_cast<std::size_t>(p.pos)] ? Sign::Pos : m[static_cast<std::size_t>(p.neg)] ? Sign::Neg : Sign::Zero;
}

FormulaPtr to_formula(const FlatFormula& flat) {
  std::vector<FormulaPtr> parts;
  for (const auto& a : flat.atoms) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, ConstDef>) {
            parts.push_back(Formula::equal(Term::var(x.var), Term::constant(x.value)));
          } else if constexpr (std::is_same_v<T, OpDef>) {
            parts.push_back(Formula::equal(Term::var(x.var), Term::binary(x.op, Term::var(x.lhs), Term::var(x.rhs))));
          } else if constexpr (std::is_same_v<T, Copy>) {
            parts.push_back(Formula::equal(Term::var(x.var), Term::var(x.source)));
          } else if constexpr (std::is_same_v<T, NonNeg>) {
            parts.push_back(Formula::nonnegative(Term::var(x.var)));
          } else {
            parts.push_back(Formula::nonnegative(Term::var(x.var) - Term::var(x.other)));
          }
        },
        a);
  }
  FormulaPtr f = Formula::conjunction(std::move(parts));
  for (auto it = flat.existentials.rbegin(); it != flat.existentials.rend(); ++it) f = Formula::exists(*it, f);
  return f;
}

Term random_term(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> d(0, 5);
  const int k = depth == 0 ? d(rng) % 3 : d(rng);
  switch (k) {
    case 0: return var(d(rng) % 2 ? "X" : "Y");
    case 1: return Term::number(Rational(d(rng) % 3 - 1));
    case 2: return sym("k");
    default: {
      const Op op = static_cast<Op>(d(rng) % 4);
      return Term::binary(op, random_term(rng, depth - 1), random_term(rng, depth - 1));
    }
  }
}

}  // namespace

TEST_CASE("flattening introduces one helper per constant and operator") {
  Fobnn f;
  f.species = {"S", "E", "C"};
  f.existentials = {AnnotatedVar::dot("C")};
  f.atoms.push_back(EqualAtom{Term::var(AnnotatedVar::dot("C")),
                              sym("k_on") * var("S") * var("E") - sym("k_off") * var("C") - sym("k_cat") * var("C")});
  const FlatFormula flat = flatten(f);
  std::vector<std::string> got;
  for (const auto& a : flat.atoms) got.push_back(to_string(a));
  CHECK(got == std::vector<std::string>{
                   "w[1] = k_on", "w[2] = w[1] * S", "w[3] = w[2] * E", "w[4] = k_off", "w[5] = w[4] * C",
                   "w[6] = w[3] - w[5]", "w[7] = k_cat", "w[8] = w[7] * C", "w[9] = w[6] - w[8]", "dot(C) = w[9]"});
  CHECK(flat.existentials.size() == 10);

  Fobnn z;
  z.species = {"X"};
  z.atoms.push_back(EqualAtom{var("X"), Term::number(0)});
  std::vector<std::string> zero;
  for (const auto& a : flatten(z).atoms) zero.push_back(to_string(a));
  CHECK(zero == std::vector<std::string>{"w[1] = 0", "X = w[1]"});
}

TEST_CASE("helpers are numbered across atoms and never shared") {
  Fobnn f;
  f.species = {"X", "Y"};
  f.atoms.push_back(EqualAtom{(var("X") + var("Y")) * (var("X") + var("Y")), Term::negate(Term::number(1))});
  f.atoms.push_back(NonNegativeAtom{var("X") - var("Y")});
  const FlatFormula flat = flatten(f);
  std::vector<std::string> got;
  for (const auto& a : flat.atoms) got.push_back(to_string(a));
  CHECK(got == std::vector<std::string>{"w[1] = X + Y", "w[2] = X + Y", "w[3] = w[1] * w[2]", "w[4] = 0", "w[5] = 1",
                                        "w[6] = w[4] - w[5]", "w[3] = w[6]", "w[7] = X - Y", "w[7] >= 0"});
}

TEST_CASE("ADD op-def clauses are the six listed ones") {
  const VarPair v{1, 2}, a{3, 4}, b{5, 6};
  const auto cs = op_def_clauses(Op::Add, v, a, b);
  CHECK(cs == std::vector<Clause>{{3, 5, -1}, {4, 6, -2}, {-3, 6, 1}, {-5, 4, 1}, {-4, 5, 2}, {-6, 3, 2}});
}

TEST_CASE("op-def projections equal the sign relations") {
  const VarPair v{1, 2}, a{3, 4}, b{5, 6};
  for (Op op : {Op::Add, Op::Sub, Op::Mul, Op::Div}) {
    CAPTURE(op_symbol(op));
    std::vector<Clause> cs = op_def_clauses(op, v, a, b);
    for (VarPair p : {v, a, b}) cs.push_back({-p.pos, -p.neg});
    std::set<std::tuple<Sign, Sign, Sign>> projected;
    for (unsigned bits = 0; bits < 64; ++bits) {
      std::vector<bool> m(7);
      for (int i = 0; i < 6; ++i) m[static_cast<std::size_t>(i + 1)] = (bits >> i) & 1;
      if (satisfies(cs, m)) projected.emplace(decode(m, a), decode(m, b), decode(m, v));
    }
    std::set<std::tuple<Sign, Sign, Sign>> rel;
    for (const auto& t : sign_relation(op)) rel.emplace(t.lhs, t.rhs, t.result);
    CHECK(projected == rel);
    if (op == Op::Div)
      for (const auto& [x, y, r] : projected) CHECK(y != Sign::Zero);
  }
}

TEST_CASE("ge clauses") {
  const VarPair a{1, 2}, b{3, 4};
  std::vector<Clause> cs = ge_clauses(a, b);
  for (VarPair p : {a, b}) cs.push_back({-p.pos, -p.neg});
  for (unsigned bits = 0; bits < 16; ++bits) {
    std::vector<bool> m(5);
    for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i + 1)] = (bits >> i) & 1;
    if (m[1] && m[2]) continue;
    if (m[3] && m[4]) continue;
    const bool expected = abstract_apply(Op::Sub, decode(m, a), decode(m, b)).contains(Sign::Pos) ||
                          abstract_apply(Op::Sub, decode(m, a), decode(m, b)).contains(Sign::Zero);
    CHECK(satisfies(cs, m) == expected);
  }
}

TEST_CASE("flattening preserves satisfiability") {
  std::mt19937 rng(3);
  int sat_count = 0;
  for (int i = 0; i < 50; ++i) {
    Fobnn f;
    f.species = {"X", "Y"};
    f.atoms.push_back(EqualAtom{random_term(rng, 2), random_term(rng, 2)});
    if (i % 2) f.atoms.push_back(NonNegativeAtom{random_term(rng, 2)});
    const FlatFormula flat = flatten(f);
    const FormulaPtr src = f.to_formula();
    const FormulaPtr dst = to_formula(flat);
    for (Sign x : kAllSigns)
      for (Sign y : kAllSigns) {
        SignAssignment a;
        a.bind(AnnotatedVar::current("X"), x);
        a.bind(AnnotatedVar::current("Y"), y);
        const bool s = eval_formula(*src, a);
        CHECK(s == eval_formula(*dst, a));
        sat_count += s;
      }
  }
  CHECK(sat_count > 0);
}

TEST_CASE("encoding registry and units") {
  const Encoding enc = encode(flatten(build_fobnn(build_odes(fobnn::testing::renz()))));
  const auto& pairs = enc.registry.pairs();
  REQUIRE(pairs.size() >= 16);
  CHECK(pairs[0].first.to_string() == "S");
  CHECK(pairs[4].first.to_string() == "S'");
  CHECK(pairs[8].first.to_string() == "dot(S)");
  CHECK(pairs[12].first.to_string() == "dot(S')");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    CHECK(pairs[i].second.pos == static_cast<int>(2 * i + 1));
    CHECK(pairs[i].second.neg == static_cast<int>(2 * i + 2));
  }
  CHECK(enc.cnf.num_vars == static_cast<int>(2 * pairs.size()));
  for (const auto& c : enc.cnf.clauses) {
    CHECK_FALSE(c.empty());
    for (int lit : c) CHECK(std::abs(lit) <= enc.cnf.num_vars);
  }
  // X1 units for species, no duplicates from the X >= 0 atoms
  std::size_t units = 0;
  for (const auto& c : enc.cnf.clauses) units += c == Clause{-2};
  CHECK(units == 1);
}

TEST_CASE("DIMACS emission") {
  CHECK(emit_dimacs(Cnf{}, VarRegistry{}) == "p cnf 0 0\n");
  const Encoding enc = encode(flatten(build_fobnn(build_odes(fobnn::testing::renz()))));
  const std::string text = emit_dimacs(enc.cnf, enc.registry);
  CHECK(text == emit_dimacs(enc.cnf, enc.registry));
  CHECK(text.starts_with("c map S 1 2\nc map E 3 4\n"));
  const auto p = fobnn::testing::read_dimacs(text);
  CHECK(p.num_vars == enc.cnf.num_vars);
  CHECK(p.clauses == enc.cnf.clauses);
  CHECK(text.find("\r") == std::string::npos);
}

TEST_CASE("shared subterms are encoded separately") {
  Fobnn f;
  f.species = {};
  f.existentials = {AnnotatedVar::current("X"), AnnotatedVar::current("Y")};
  f.atoms.push_back(EqualAtom{(var("X") + var("Y")) * (var("X") + var("Y")), Term::negate(Term::number(1))});
  const Encoding enc = encode(flatten(f));
  for (const auto& name : available_backends()) {
    auto solver = make_backend(name);
    solver->reserve(enc.cnf.num_vars);
    for (const auto& c : enc.cnf.clauses) solver->add_clause(c);
    const VarPair x = enc.registry.at(AnnotatedVar::current("X"));
    const VarPair y = enc.registry.at(AnnotatedVar::current("Y"));
    const std::vector<int> assume{x.pos, -x.neg, -y.pos, y.neg};
    CHECK(solver->solve(assume));
    CHECK(solver->value(x.pos));
    CHECK(solver->value(y.neg));
  }
}
