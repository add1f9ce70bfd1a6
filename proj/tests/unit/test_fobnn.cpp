#include "corpus.hpp"
#include "fobnn/fobnn.hpp"
#include "fobnn/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fobnn;

namespace {

std::size_t count_equal(const Fobnn& f) {
  return static_cast<std::size_t>(
      std::count_if(f.atoms.begin(), f.atoms.end(), [](const Atom& a) { return std::holds_alternative<EqualAtom>(a); }));
}

State st(std::initializer_list<Sign> s) { return State{s, {}}; }

constexpr Sign P = Sign::Pos;
constexpr Sign Z = Sign::Zero;

}  // namespace

TEST_CASE("ODEs of the enzyme network") {
  const OdeSystem odes = build_odes(fobnn::testing::renz());
  CHECK(odes.rhs("S").to_string() == "-k_on*S*E + k_off*C");
  CHECK(odes.rhs("C").to_string() == "k_on*S*E - k_off*C - k_cat*C");
  CHECK(odes.rhs("P").to_string() == "2*k_cat*C");
  CHECK_THROWS_AS(odes.rhs("Q"), std::out_of_range);
}

TEST_CASE("species without reactions get a zero derivative") {
  const OdeSystem odes = build_odes(parse_native("species: A, B\nconst k > 0\nr: A => @ k*A\n"));
  CHECK(odes.rhs("B").to_string() == "0");
  CHECK(odes.rhs("A").to_string() == "-k*A");
}

TEST_CASE("a species on both sides only keeps its net coefficient") {
  const OdeSystem odes = build_odes(parse_native("species: A, B\nconst k > 0\nr: A + B => 2*B @ k*A*B\n"));
  CHECK(odes.rhs("B").to_string() == "k*A*B");
  CHECK(odes.rhs("A").to_string() == "-k*A*B");
}

TEST_CASE("FOBNN shape") {
  const Fobnn f = build_fobnn(build_odes(fobnn::testing::renz()));
  CHECK(f.existentials.size() == 8);
  CHECK(f.atoms.size() == 20);
  CHECK(count_equal(f) == 12);
  CHECK(to_string(f.atoms[2]) == "dot(C) = k_on*S*E - k_off*C - k_cat*C");
  CHECK(to_string(f.atoms[6]) == "dot(C') = k_on*S'*E' - k_off*C' - k_cat*C'");
  CHECK(to_string(f.atoms[8]) == "S' = S + dot(S)");
  CHECK(to_string(f.atoms[9]) == "S >= 0");
  CHECK(to_string(f.atoms[10]) == "S' >= 0");

  const Fobnn single = build_fobnn(build_odes(parse_native("species: X\n")));
  REQUIRE(single.atoms.size() == 5);
  CHECK(to_string(single.atoms[0]) == "dot(X) = 0");
  CHECK(to_string(single.atoms[1]) == "dot(X') = 0");
  CHECK(to_string(single.atoms[2]) == "X' = X + dot(X)");
}

TEST_CASE("mass-action constraints") {
  const Fobnn base = build_fobnn(build_odes(fobnn::testing::renz()));
  const Fobnn ma = add_mass_action_constraints(base, {"S", "P"});
  REQUIRE(ma.atoms.size() == base.atoms.size() + 2);
  CHECK(to_string(ma.atoms.back()) == "P' - P >= 0");
  CHECK(add_mass_action_constraints(base, {}).atoms.size() == base.atoms.size());
  CHECK_THROWS_AS(add_mass_action_constraints(base, {"Q"}), std::invalid_argument);
}

TEST_CASE("mass-action keeps only the full-complex successor") {
  const ReactionNetwork rn = parse_native("species: A, B, C\nconst k > 0\nr: A + B => C @ k*A*B\n");
  const Fobnn f = add_mass_action_constraints(build_fobnn(build_odes(rn)), rn.species);
  std::set<State> succ;
  for (const auto& t : brute_force_transitions(f, false))
    if (t.from == st({P, P, Z})) succ.insert(t.to);
  CHECK(succ == std::set<State>{st({P, P, P})});
}

TEST_CASE("mass-action detection") {
  CHECK(detect_mass_action(fobnn::testing::renz()) == std::vector<std::string>{"S", "E", "C", "P"});
  const ReactionNetwork mm = parse_native("species: S, P\nconst V > 0\nconst K > 0\nr: S => P @ V*S/(K + S)\n");
  CHECK(detect_mass_action(mm) == std::vector<std::string>{"P"});
  const ReactionNetwork wrong_order = parse_native("species: A, B\nconst k > 0\nr: 2*A => B @ k*A\n");
  CHECK(detect_mass_action(wrong_order) == std::vector<std::string>{"B"});
  const ReactionNetwork commuted = parse_native("species: A, B\nconst k > 0\nr: 2*A => B @ A*k*A\n");
  CHECK(detect_mass_action(commuted) == std::vector<std::string>{"A", "B"});
  const ReactionNetwork negative = parse_native("species: A, B\nconst k = -1\nr: A => B @ k*A\n");
  CHECK(detect_mass_action(negative) == std::vector<std::string>{"B"});
}

TEST_CASE("constraint text") {
  const Fobnn base = build_fobnn(build_odes(fobnn::testing::renz()));
  const Fobnn c = add_constraint_text(base, "P' >= P and S >= 0 and E' = E");
  REQUIRE(c.atoms.size() == base.atoms.size() + 3);
  CHECK(to_string(c.atoms[20]) == "P' - P >= 0");
  CHECK(to_string(c.atoms[21]) == "S >= 0");
  CHECK(to_string(c.atoms[22]) == "E' = E");
  CHECK_THROWS_AS(add_constraint_text(base, "S' >"), InputError);
  CHECK_THROWS_AS(add_constraint_text(base, "S' >="), InputError);
  CHECK_THROWS_AS(add_constraint_text(base, "S'"), InputError);
  CHECK_THROWS_AS(add_constraint_text(base, "dot(S) >= 0"), InputError);
  CHECK_THROWS_AS(add_constraint_text(base, "Q >= 0"), InputError);
}

TEST_CASE("constraint text matches the mass-action atom") {
  const Fobnn base = build_fobnn(build_odes(fobnn::testing::renz()));
  CHECK(brute_force_transitions(add_constraint_text(base, "P' >= P"), false) ==
        brute_force_transitions(add_mass_action_constraints(base, {"P"}), false));
  CHECK(brute_force_transitions(add_constraint_text(base, "S >= 0"), false) == brute_force_transitions(base, false));
}

TEST_CASE("oracle on a conversion") {
  const Fobnn f = build_fobnn(build_odes(parse_native("species: A, B\nconst k > 0\nr: A => B @ k*A\n")));
  const auto ts = brute_force_transitions(f, false);
  CHECK(ts.contains({st({P, Z}), st({P, P})}));
  CHECK(ts.contains({st({P, Z}), st({Z, P})}));
  CHECK_FALSE(ts.contains({st({P, Z}), st({P, Z})}));
  CHECK(ts.contains({st({Z, Z}), st({Z, Z})}));
  for (const auto& t : ts)
    if (t.from == st({Z, Z})) CHECK(t.to == st({Z, Z}));
}

TEST_CASE("oracle on an empty network") {
  const Fobnn f = build_fobnn(build_odes(parse_native("species: A\n")));
  const auto ts = brute_force_transitions(f, false);
  CHECK(ts == std::set<Transition>{{st({P}), st({P})}, {st({Z}), st({Z})}});
  for (const auto& t : brute_force_transitions(f, true)) {
    CHECK(t.from.derivatives == std::vector<Sign>{Z});
    CHECK(t.to.derivatives == std::vector<Sign>{Z});
  }
}

TEST_CASE("constraints never add transitions") {
  for (const auto& n : fobnn::testing::small_corpus()) {
    CAPTURE(n.name);
    const Fobnn base = build_fobnn(build_odes(n.rn));
    const auto all = brute_force_transitions(base, false);
    const auto ma = brute_force_transitions(add_mass_action_constraints(base, n.rn.species), false);
    CHECK(std::includes(all.begin(), all.end(), ma.begin(), ma.end()));
    for (const auto& t : ma)
      for (std::size_t i = 0; i < t.from.species.size(); ++i)
        CHECK_FALSE((t.from.species[i] == P && t.to.species[i] == Z));
  }
}

TEST_CASE("oracle guard") {
  const Fobnn f = build_fobnn(build_odes(parse_native("species: A, B, C, D, E, F, G\n")));
  CHECK_THROWS_AS(brute_force_transitions(f, false), GuardError);
}
