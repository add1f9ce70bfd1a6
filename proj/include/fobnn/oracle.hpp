#pragma once

#include "fobnn/fobnn.hpp"
#include "fobnn/state.hpp"

#include <set>

namespace fobnn {

inline constexpr std::size_t kOracleSpeciesLimit = 6;

/// Every transition of `fobnn` found by enumerating sign assignments and
/// checking atoms with eval_term. Species and next-species range over
/// {+, 0}; existential variables over all three signs. With `extended`, the
/// derivative witnesses become part of the states.
///
/// Throws GuardError above kOracleSpeciesLimit species.
std::set<Transition> brute_force_transitions(const Fobnn& fobnn, bool extended);

}  // namespace fobnn
