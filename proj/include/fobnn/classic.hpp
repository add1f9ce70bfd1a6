#pragma once

#include "fobnn/graph.hpp"
#include "fobnn/network.hpp"

#include <set>

namespace fobnn {

inline constexpr std::size_t kClassicSpeciesLimit = 12;

// Boolean states reuse State with Pos for present and Zero for absent.

/// One enabled reaction fires: its products become present, its reactants
/// may or may not survive, everything else is unchanged. No enabled
/// reaction, no successor.
std::set<State> classic_successors(const ReactionNetwork& rn, const State& s);

/// All 2^n states and their classic successors. Throws GuardError above
/// kClassicSpeciesLimit species unless `force`.
TransitionGraph classic_stg(const ReactionNetwork& rn, bool force = false);

}  // namespace fobnn
