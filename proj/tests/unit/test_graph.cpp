#include "corpus.hpp"
#include "fobnn/classic.hpp"
#include "fobnn/graph.hpp"
#include "fobnn/pipeline.hpp"
#include "fobnn/session.hpp"

#include <doctest.h>

using namespace fobnn;

namespace {

constexpr Sign P = Sign::Pos;
constexpr Sign Z = Sign::Zero;

State st(std::initializer_list<Sign> s) { return State{s, {}}; }

TransitionGraph fobnn_graph(const ReactionNetwork& rn, const std::string& mass_action) {
  ModelOptions o;
  o.mass_action = mass_action;
  SolverSession s(encode_fobnn(prepare_fobnn(rn, o)));
  return s.build_stg();
}

}  // namespace

TEST_CASE("classic successors of the enzyme network") {
  const ReactionNetwork rn = fobnn::testing::renz();
  const auto succ = classic_successors(rn, st({P, P, Z, Z}));
  CHECK(succ == std::set<State>{st({Z, Z, P, Z}), st({Z, P, P, Z}), st({P, Z, P, Z}), st({P, P, P, Z})});
  CHECK(classic_successors(rn, st({Z, Z, Z, Z})).empty());
}

TEST_CASE("products stay present when also consumed") {
  const ReactionNetwork rn = parse_native("species: A, B\nconst k > 0\nr: A + B => 2*B @ k*A*B\n");
  const auto succ = classic_successors(rn, st({P, P}));
  CHECK(succ == std::set<State>{st({Z, P}), st({P, P})});
}

TEST_CASE("reactions without reactants are always enabled") {
  const ReactionNetwork rn = parse_native("species: A\nconst k > 0\nr: => A @ k\n");
  CHECK(classic_successors(rn, st({Z})) == std::set<State>{st({P})});
}

TEST_CASE("classic graph") {
  const TransitionGraph g = classic_stg(fobnn::testing::renz());
  CHECK(g.kind == GraphKind::Classic);
  CHECK(g.nodes.size() == 16);
  CHECK(g.out_degree(st({Z, Z, Z, Z})) == 0);

  const TransitionGraph none = classic_stg(parse_native("species: A, B, C\n"));
  CHECK(none.nodes.size() == 8);
  CHECK(none.edges.empty());

  std::string text = "species: ";
  for (int i = 0; i < 13; ++i) text += (i ? ", X" : "X") + std::to_string(i);
  CHECK_THROWS_AS(classic_stg(parse_native(text + "\n")), GuardError);
}

TEST_CASE("classic edges respect the firing rule") {
  const ReactionNetwork rn = fobnn::testing::renz();
  const TransitionGraph g = classic_stg(rn);
  for (const auto& e : g.edges) {
    bool explained = false;
    for (const auto& r : rn.reactions) {
      bool ok = true;
      for (const auto& [x, _] : r.reactants) ok &= e.from.species[rn.species_index(x)] == P;
      for (const auto& [y, _] : r.products) ok &= e.to.species[rn.species_index(y)] == P;
      for (std::size_t i = 0; i < rn.species.size(); ++i) {
        const bool involved = r.reactant_coefficient(rn.species[i]) != 0 || r.product_coefficient(rn.species[i]) != 0;
        if (!involved) ok &= e.from.species[i] == e.to.species[i];
      }
      explained |= ok;
    }
    CHECK(explained);
  }
}

TEST_CASE("density") {
  TransitionGraph g;
  g.species = {"A"};
  CHECK_THROWS_AS(density(g), std::invalid_argument);
  g.add_edge({st({P}), st({P})});
  CHECK(density(g) == 1);
  g.add_edge({st({Z}), st({Z})});
  CHECK(density(g) == Rational(1, 2));
  g.add_edge({st({Z}), st({P})});
  g.add_edge({st({P}), st({Z})});
  CHECK(density(g) == 1);
}

TEST_CASE("graph fixed points") {
  TransitionGraph g;
  g.species = {"A"};
  g.add_edge({st({P}), st({P})});
  g.add_edge({st({Z}), st({Z})});
  g.add_edge({st({Z}), st({P})});
  CHECK(graph_fixed_points(g) == std::set<State>{st({P})});
}

TEST_CASE("comparison") {
  const ReactionNetwork rn = fobnn::testing::renz();
  const TransitionGraph ma = fobnn_graph(rn, "all");
  const TransitionGraph plain = fobnn_graph(rn, "off");
  const ComparisonReport self = compare(plain, plain);
  CHECK(self.shared_edges == plain.edges.size());
  CHECK(self.only_in_a.empty());
  CHECK(self.only_in_b.empty());

  const ComparisonReport r = compare(ma, plain);
  CHECK(r.shared_edges == ma.edges.size());
  CHECK(r.edges_a < r.edges_b);

  const ComparisonReport flipped = compare(plain, ma);
  CHECK(flipped.shared_edges == r.shared_edges);
  CHECK(flipped.nodes_a == r.nodes_b);
  CHECK(flipped.only_in_a == r.only_in_b);
  CHECK(flipped.fixed_points_a == r.fixed_points_b);

  TransitionGraph other = plain;
  other.species = {"A", "B", "C", "D"};
  CHECK_THROWS_AS(compare(plain, other), std::invalid_argument);
}

TEST_CASE("serialization") {
  TransitionGraph empty;
  empty.species = {"A", "B"};
  empty.nodes.insert(st({P, Z}));
  CHECK(to_dot(empty) == "digraph stg {\n  // kind: fobnn-base\n  n0 [label=\"A=+,B=0\"];\n}\n");

  TransitionGraph g = fobnn_graph(fobnn::testing::renz(), "all");
  g.metadata["model"] = "renz.rn";
  CHECK(graph_from_json(to_json(g)) == g);
  CHECK(to_json(g) == to_json(graph_from_json(to_json(g))));
  CHECK(to_dot(g) == fobnn::testing::read_text(fobnn::testing::data_path("renz_ma.dot")));

  const TransitionGraph c = classic_stg(fobnn::testing::renz());
  CHECK(graph_from_json(to_json(c)) == c);

  CHECK_THROWS_AS(graph_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"kind":"x","species":[],"nodes":[],"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"kind":"classic","species":["A"],"nodes":["A=+"],"edges":[["A=+","A=0"]]})"),
                  std::invalid_argument);
}

TEST_CASE("states parse and format") {
  const std::vector<std::string> sp{"S", "E"};
  CHECK(format_state(st({P, Z}), sp) == "S=+,E=0");
  CHECK(parse_state("E=0,S=+", sp) == st({P, Z}));
  const State ext{{P, Z}, {Sign::Neg, Z}};
  CHECK(format_state(ext, sp) == "S=+,E=0,dot(S)=-,dot(E)=0");
  CHECK(parse_state(format_state(ext, sp), sp) == ext);
  CHECK_THROWS_AS(parse_state("S=+", sp), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("S=+,E=0,S=0", sp), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("S=+,E=?", sp), std::invalid_argument);
  CHECK_THROWS_AS(parse_state("S=+,E=0,Q=0", sp), std::invalid_argument);
}
