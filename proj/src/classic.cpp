#include "fobnn/classic.hpp"

#include <stdexcept>

namespace fobnn {

std::set<State> classic_successors(const ReactionNetwork& rn, const State& s) {
  if (s.species.size() != rn.species.size()) throw std::invalid_argument("state does not match the network's species");
  std::set<State> out;
  for (const auto& r : rn.reactions) {
    bool enabled = true;
    for (const auto& [x, _] : r.reactants) enabled &= s.species[rn.species_index(x)] == Sign::Pos;
    if (!enabled) continue;

    State base = s;
    std::vector<std::size_t> free;
    std::vector<bool> produced(rn.species.size(), false);
    for (const auto& [y, _] : r.products) produced[rn.species_index(y)] = true;
    for (const auto& [x, _] : r.reactants) {
      const std::size_t i = rn.species_index(x);
      if (!produced[i]) free.push_back(i);
    }
    for (std::size_t i = 0; i < produced.size(); ++i)
      if (produced[i]) base.species[i] = Sign::Pos;

    for (std::size_t mask = 0; mask < (std::size_t{1} << free.size()); ++mask) {
      State t = base;
      for (std::size_t k = 0; k < free.size(); ++k) t.species[free[k]] = (mask >> k) & 1 ? Sign::Pos : Sign::Zero;
      out.insert(std::move(t));
    }
  }
  return out;
}

TransitionGraph classic_stg(const ReactionNetwork& rn, bool force) {
  const std::size_t n = rn.species.size();
  if (!force && n > kClassicSpeciesLimit)
    throw GuardError("refusing to expand the classic graph of " + std::to_string(n) + " species (limit " +
                     std::to_string(kClassicSpeciesLimit) + ", use --force)");
  TransitionGraph g;
  g.kind = GraphKind::Classic;
  g.species = rn.species;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    State s;
    for (std::size_t i = 0; i < n; ++i) s.species.push_back((mask >> (n - 1 - i)) & 1 ? Sign::Pos : Sign::Zero);
    g.nodes.insert(s);
    for (auto& t : classic_successors(rn, s)) g.edges.insert({s, std::move(t)});
  }
  return g;
}

}  // namespace fobnn
