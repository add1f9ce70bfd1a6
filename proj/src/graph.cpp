#include "fobnn/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fobnn {

using nlohmann::json;

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::FobnnBase: return "fobnn-base";
    case GraphKind::FobnnExtended: return "fobnn-extended";
    case GraphKind::Classic: return "classic";
  }
  return "?";
}

GraphKind parse_graph_kind(std::string_view text) {
  for (GraphKind k : {GraphKind::FobnnBase, GraphKind::FobnnExtended, GraphKind::Classic})
    if (text == to_string(k)) return k;
  throw std::invalid_argument("unknown graph kind '" + std::string(text) + "'");
}

void TransitionGraph::add_edge(const Transition& t) {
  nodes.insert(t.from);
  nodes.insert(t.to);
  edges.insert(t);
}

std::size_t TransitionGraph::out_degree(const State& s) const {
  auto lo = edges.lower_bound(Transition{s, {}});
  std::size_t n = 0;
  for (auto it = lo; it != edges.end() && it->from == s; ++it) ++n;
  return n;
}

Rational density(const TransitionGraph& g) {
  if (g.nodes.empty()) throw std::invalid_argument("density of an empty graph");
  const auto v = static_cast<long long>(g.nodes.size());
  return Rational(static_cast<long long>(g.edges.size()), v * v);
}

std::set<State> graph_fixed_points(const TransitionGraph& g) {
  std::set<State> out;
  for (const auto& s : g.nodes)
    if (g.edges.contains({s, s}) && g.out_degree(s) == 1) out.insert(s);
  return out;
}

ComparisonReport compare(const TransitionGraph& a, const TransitionGraph& b) {
  if (a.species != b.species) throw std::invalid_argument("cannot compare graphs over different species");
  ComparisonReport r;
  r.nodes_a = a.nodes.size();
  r.nodes_b = b.nodes.size();
  r.edges_a = a.edges.size();
  r.edges_b = b.edges.size();
  for (const auto& e : a.edges) r.shared_edges += b.edges.contains(e);
  std::set_difference(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end(),
                      std::inserter(r.only_in_a, r.only_in_a.end()));
  std::set_difference(b.nodes.begin(), b.nodes.end(), a.nodes.begin(), a.nodes.end(),
                      std::inserter(r.only_in_b, r.only_in_b.end()));
  r.fixed_points_a = graph_fixed_points(a);
  r.fixed_points_b = graph_fixed_points(b);
  return r;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

json states_json(const std::set<State>& states, std::span<const std::string> species) {
  json arr = json::array();
  for (const auto& s : states) arr.push_back(format_state(s, species));
  return arr;
}

}  // namespace

std::string to_dot(const TransitionGraph& g) {
  std::map<State, std::size_t> ids;
  std::ostringstream out;
  out << "digraph stg {\n";
  out << "  // kind: " << to_string(g.kind) << "\n";
  for (const auto& s : g.nodes) {
    const std::size_t id = ids.size();
    ids.emplace(s, id);
    out << "  n" << id << " [label=" << quoted(format_state(s, g.species)) << "];\n";
  }
  for (const auto& e : g.edges) out << "  n" << ids.at(e.from) << " -> n" << ids.at(e.to) << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_json(const TransitionGraph& g) {
  json j;
  j["kind"] = to_string(g.kind);
  j["species"] = g.species;
  j["nodes"] = states_json(g.nodes, g.species);
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({format_state(e.from, g.species), format_state(e.to, g.species)});
  j["edges"] = std::move(edges);
  j["metadata"] = g.metadata;
  return j.dump(2) + "\n";
}

std::string report_to_json(const ComparisonReport& r, std::span<const std::string> species) {
  json j;
  j["nodes"] = {r.nodes_a, r.nodes_b};
  j["edges"] = {r.edges_a, r.edges_b};
  j["shared_edges"] = r.shared_edges;
  j["only_in_first"] = states_json(r.only_in_a, species);
  j["only_in_second"] = states_json(r.only_in_b, species);
  j["fixed_points_first"] = states_json(r.fixed_points_a, species);
  j["fixed_points_second"] = states_json(r.fixed_points_b, species);
  return j.dump(2) + "\n";
}

TransitionGraph graph_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    TransitionGraph g;
    g.kind = parse_graph_kind(j.at("kind").get<std::string>());
    g.species = j.at("species").get<std::vector<std::string>>();
    for (const auto& n : j.at("nodes")) g.nodes.insert(parse_state(n.get<std::string>(), g.species));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a [from, to] pair");
      Transition t{parse_state(e[0].get<std::string>(), g.species), parse_state(e[1].get<std::string>(), g.species)};
      if (!g.nodes.contains(t.from) || !g.nodes.contains(t.to))
        throw std::invalid_argument("edge endpoint is not a node");
      g.edges.insert(std::move(t));
    }
    if (j.contains("metadata")) g.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    return g;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace fobnn
