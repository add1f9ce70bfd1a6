#include "corpus.hpp"
#include "fobnn/errors.hpp"
#include "fobnn/oracle.hpp"
#include "fobnn/pipeline.hpp"
#include "fobnn/session.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace fobnn;

namespace {

constexpr Sign P = Sign::Pos;
constexpr Sign Z = Sign::Zero;

Fobnn renz_fobnn(bool mass_action) {
  ModelOptions o;
  o.mass_action = mass_action ? "all" : "off";
  return prepare_fobnn(fobnn::testing::renz(), o);
}

std::set<Transition> as_set(const std::vector<Transition>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("backends") {
  CHECK(available_backends() == std::vector<std::string>{"picosat", "cdcl"});
  CHECK_THROWS_AS(make_backend("minisat"), std::invalid_argument);
  for (const auto& name : available_backends()) {
    CAPTURE(name);
    auto s = make_backend(name);
    CHECK(s->name() == name);
    CHECK(s->solve({}));
    const std::vector<std::vector<int>> clauses{{1, 2}, {-1, 2}, {1, -2}};
    for (const auto& c : clauses) s->add_clause(c);
    CHECK(s->solve({}));
    CHECK(s->value(1));
    CHECK(s->value(2));
    const std::vector<int> a{-1};
    CHECK_FALSE(s->solve(a));
    CHECK(s->solve({}));
    s->add_clause(std::vector<int>{-1, -2});
    CHECK_FALSE(s->solve({}));
  }
}

TEST_CASE("sessions open on satisfiable and unsatisfiable encodings") {
  SolverSession s(encode_fobnn(renz_fobnn(false)));
  CHECK(s.solve());

  Fobnn bad;
  bad.species = {"X"};
  bad.atoms.push_back(EqualAtom{Term::var(AnnotatedVar::current("X")), Term::number(0)});
  bad.atoms.push_back(EqualAtom{Term::var(AnnotatedVar::current("X")), Term::number(1)});
  SolverSession u(encode_fobnn(bad));
  CHECK_FALSE(u.solve());
  CHECK(u.build_stg().edges.empty());
  CHECK(u.build_stg().nodes.empty());
}

TEST_CASE("reopening gives the same first model") {
  for (const auto& name : available_backends()) {
    SolverSession a(encode_fobnn(renz_fobnn(false)), name);
    SolverSession b(encode_fobnn(renz_fobnn(false)), name);
    REQUIRE(a.solve());
    REQUIRE(b.solve());
    CHECK(a.decode_model(true) == b.decode_model(true));
  }
}

TEST_CASE("assumptions for states") {
  SolverSession s(encode_fobnn(renz_fobnn(false)));
  const State sigma{{P, Z, P, Z}, {}};
  const auto lits = s.assumptions_for_state(sigma);
  CHECK(lits == std::vector<int>{1, -2, -3, -4, 5, -6, -7, -8});
  REQUIRE(s.solve(lits));
  CHECK(s.decode_model(false).from == sigma);
}

TEST_CASE("decoded transitions round-trip through assumptions") {
  SolverSession s(encode_fobnn(renz_fobnn(false)));
  REQUIRE(s.solve());
  const Transition t = s.decode_model(false);
  REQUIRE(s.solve(s.assumptions_for_state(t.from)));
  CHECK(s.decode_model(false).from == t.from);
}

TEST_CASE("limit and start state") {
  SolverSession s(encode_fobnn(renz_fobnn(true)));
  CHECK(s.enumerate_transitions(1).size() == 1);
  CHECK_THROWS_AS(s.enumerate_transitions(0), std::invalid_argument);

  SolverSession f(encode_fobnn(renz_fobnn(true)));
  const State full{{P, P, P, P}, {}};
  const auto ts = f.enumerate_transitions(std::nullopt, full);
  CHECK(ts == std::vector<Transition>{{full, full}});
}

TEST_CASE("blocked transitions never reappear") {
  SolverSession s(encode_fobnn(renz_fobnn(false)));
  const auto ts = s.enumerate_transitions();
  CHECK(as_set(ts).size() == ts.size());
  CHECK(s.blocked_count() == ts.size());
  CHECK_FALSE(s.solve());
}

TEST_CASE("enumeration equals the oracle on the small corpus") {
  const auto corpus = fobnn::testing::small_corpus();
  REQUIRE(corpus.size() >= 20);
  for (const auto& n : corpus) {
    for (bool ma : {false, true}) {
      CAPTURE(n.name);
      CAPTURE(ma);
      Fobnn f = build_fobnn(build_odes(n.rn));
      if (ma) f = add_mass_action_constraints(std::move(f), n.rn.species);
      const auto expected = brute_force_transitions(f, false);
      for (const auto& backend : available_backends()) {
        SolverSession s(encode_fobnn(f), backend);
        CHECK(as_set(s.enumerate_transitions()) == expected);
      }
    }
  }
}

TEST_CASE("extended enumeration equals the oracle") {
  for (const auto& n : fobnn::testing::handwritten_networks()) {
    CAPTURE(n.name);
    const Fobnn f = build_fobnn(build_odes(n.rn));
    SolverSession s(encode_fobnn(f));
    const auto ts = s.enumerate_transitions(std::nullopt, std::nullopt, true);
    CHECK(as_set(ts) == brute_force_transitions(f, true));
    CHECK(as_set(ts).size() == ts.size());
  }
}

TEST_CASE("extended start state") {
  SolverSession s(encode_fobnn(renz_fobnn(false)));
  const State start{{P, P, Z, Z}, {Sign::Neg, Sign::Neg, P, Z}};
  const auto ts = s.enumerate_transitions(std::nullopt, start, true);
  REQUIRE_FALSE(ts.empty());
  for (const auto& t : ts) CHECK(t.from == start);
}

TEST_CASE("enumeration matches the oracle on the enzyme network") {
  for (bool ma : {false, true}) {
    const Fobnn f = renz_fobnn(ma);
    SolverSession s(encode_fobnn(f));
    CHECK(as_set(s.enumerate_transitions()) == brute_force_transitions(f, false));
  }
}

TEST_CASE("loop machinery is inert without its flag") {
  for (const auto& n : fobnn::testing::handwritten_networks()) {
    CAPTURE(n.name);
    const Fobnn f = build_fobnn(build_odes(n.rn));
    SolverSession before(encode_fobnn(f));
    const auto expected = as_set(before.enumerate_transitions());
    SolverSession after(encode_fobnn(f));
    after.find_fixed_points(0);
    CHECK(as_set(after.enumerate_transitions()) == expected);
  }
}

TEST_CASE("fixed points of the enzyme network") {
  SolverSession s(encode_fobnn(renz_fobnn(true)));
  const FixedPointResult r = s.find_fixed_points();
  CHECK(r.exhausted);
  const State full{{P, P, P, P}, {}};
  CHECK(std::find(r.states.begin(), r.states.end(), full) != r.states.end());

  SolverSession g(encode_fobnn(renz_fobnn(true)));
  const auto graph = g.build_stg();
  CHECK(std::set<State>(r.states.begin(), r.states.end()) == graph_fixed_points(graph));
}

TEST_CASE("loop limit cuts the fixed-point search") {
  SolverSession s(encode_fobnn(renz_fobnn(true)));
  const FixedPointResult r = s.find_fixed_points(1);
  CHECK(r.candidates == 1);
  CHECK_FALSE(r.exhausted);
}

TEST_CASE("fixed points agree with the graph on the corpus") {
  for (const auto& n : fobnn::testing::small_corpus()) {
    for (bool ma : {false, true}) {
      CAPTURE(n.name);
      Fobnn f = build_fobnn(build_odes(n.rn));
      if (ma) f = add_mass_action_constraints(std::move(f), n.rn.species);
      SolverSession a(encode_fobnn(f));
      const auto fps = a.find_fixed_points();
      CHECK(fps.exhausted);
      SolverSession b(encode_fobnn(f));
      CHECK(std::set<State>(fps.states.begin(), fps.states.end()) == graph_fixed_points(b.build_stg()));
    }
  }
}

TEST_CASE("graph guard") {
  std::string text = "species: ";
  for (int i = 0; i < 13; ++i) text += (i ? ", X" : "X") + std::to_string(i);
  SolverSession s(encode_fobnn(build_fobnn(build_odes(parse_native(text + "\n")))));
  CHECK_THROWS_AS(s.build_stg(), GuardError);
}

TEST_CASE("state counts are bounded") {
  const Fobnn f = renz_fobnn(false);
  SolverSession b(encode_fobnn(f));
  CHECK(b.build_stg().nodes.size() <= 16);
  SolverSession e(encode_fobnn(f));
  const auto g = e.build_stg(true);
  CHECK(g.kind == GraphKind::FobnnExtended);
  CHECK(g.nodes.size() <= 16 * 81);
  for (const auto& s : g.nodes) CHECK(s.extended());
}

TEST_CASE("cdcl agrees with picosat on random formulas") {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    const int vars = round < 30 ? 20 + round : 120;
    const int clauses = static_cast<int>(vars * 4.2);
    auto a = make_backend("picosat");
    auto b = make_backend("cdcl");
    std::uniform_int_distribution<int> v(1, vars), coin(0, 1);
    std::vector<Clause> cnf;
    for (int i = 0; i < clauses; ++i) {
      Clause c;
      for (int k = 0; k < 3; ++k) c.push_back(coin(rng) ? v(rng) : -v(rng));
      cnf.push_back(c);
      a->add_clause(c);
      b->add_clause(c);
    }
    for (int q = 0; q < 5; ++q) {
      std::vector<int> assume;
      for (int k = 0; k < q; ++k) assume.push_back(coin(rng) ? v(rng) : -v(rng));
      const bool sa = a->solve(assume);
      CHECK(b->solve(assume) == sa);
      if (!sa) continue;
      for (const auto& c : cnf)
        CHECK(std::any_of(c.begin(), c.end(), [&](int l) { return b->value(std::abs(l)) == (l > 0); }));
      for (int l : assume) CHECK(b->value(std::abs(l)) == (l > 0));
    }
  }
}
