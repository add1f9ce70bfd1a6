#pragma once

#include "fobnn/sign.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace fobnn {

/// Signs of the species (base state), optionally with the signs of their
/// derivatives (extended state). Positions follow the species order of the
/// model the state belongs to.
struct State {
  std::vector<Sign> species;
  std::vector<Sign> derivatives;  // empty for base states

  bool extended() const { return !derivatives.empty(); }
  State base() const { return {species, {}}; }

  auto operator<=>(const State&) const = default;
  bool operator==(const State&) const = default;
};

struct Transition {
  State from;
  State to;

  auto operator<=>(const Transition&) const = default;
  bool operator==(const Transition&) const = default;
};

/// `S=+,E=0` for base states; extended states append `dot(S)=-,...`.
std::string format_state(const State& s, std::span<const std::string> species);

/// Inverse of format_state. Every species must be mentioned exactly once;
/// derivative entries make the state extended. Throws std::invalid_argument.
State parse_state(std::string_view text, std::span<const std::string> species);

}  // namespace fobnn
