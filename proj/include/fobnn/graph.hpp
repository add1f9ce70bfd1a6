#pragma once

#include "fobnn/state.hpp"
#include "fobnn/term.hpp"

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace fobnn {

enum class GraphKind { FobnnBase, FobnnExtended, Classic };

const char* to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view text);

struct TransitionGraph {
  GraphKind kind = GraphKind::FobnnBase;
  std::vector<std::string> species;
  std::set<State> nodes;
  std::set<Transition> edges;
  std::map<std::string, std::string> metadata;

  /// Adds the edge and both endpoints.
  void add_edge(const Transition& t);

  std::size_t out_degree(const State& s) const;

  bool operator==(const TransitionGraph&) const = default;
};

/// |E| / |V|^2, self-loops included. Throws std::invalid_argument when empty.
Rational density(const TransitionGraph& g);

/// States whose only outgoing edge is a self-loop.
std::set<State> graph_fixed_points(const TransitionGraph& g);

struct ComparisonReport {
  std::size_t nodes_a = 0, nodes_b = 0;
  std::size_t edges_a = 0, edges_b = 0;
  std::size_t shared_edges = 0;
  std::set<State> only_in_a;  // states absent from b
  std::set<State> only_in_b;
  std::set<State> fixed_points_a;
  std::set<State> fixed_points_b;
};

/// Throws std::invalid_argument if the species lists differ.
ComparisonReport compare(const TransitionGraph& a, const TransitionGraph& b);

std::string to_dot(const TransitionGraph& g);
std::string to_json(const TransitionGraph& g);
std::string report_to_json(const ComparisonReport& r, std::span<const std::string> species);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
TransitionGraph graph_from_json(std::string_view text);

}  // namespace fobnn
