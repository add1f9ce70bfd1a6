#pragma once

#include "fobnn/errors.hpp"
#include "fobnn/term.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fobnn {

struct RateConstant {
  std::string name;
  std::optional<Rational> value;  // nullopt: symbolic, strictly positive

  bool operator==(const RateConstant&) const = default;
};

using Pool = std::vector<std::pair<std::string, Rational>>;

struct Reaction {
  std::string id;
  Pool reactants;
  Term kinetics = Term::number(0);
  Pool products;

  Rational reactant_coefficient(std::string_view species) const;
  Rational product_coefficient(std::string_view species) const;

  bool operator==(const Reaction&) const = default;
};

struct ReactionNetwork {
  std::vector<std::string> species;
  std::vector<RateConstant> constants;
  std::vector<Reaction> reactions;

  bool has_species(std::string_view name) const;
  const RateConstant* find_constant(std::string_view name) const;
  std::size_t species_index(std::string_view name) const;  // throws std::out_of_range

  bool operator==(const ReactionNetwork&) const = default;
};

/// Line-oriented native format:
///
///     species: S, E, C, P
///     const k_on > 0
///     const k = 0.1
///     r_on: S + E => C @ k_on*S*E
///
/// `#` starts a comment. Throws InputError with line/column.
ReactionNetwork parse_native(std::string_view text);

/// Inverse of parse_native on the model.
std::string render_native(const ReactionNetwork& rn);

/// Reads the CoreSBML-style XML subset: species, parameters, reactions with
/// MathML kinetic laws. Events, piecewise, delays, function applications,
/// rules and similar constructs are rejected with "unsupported: <name>".
ReactionNetwork parse_coresbml(std::string_view xml);

/// One message per violated invariant; empty when the network is well formed.
std::vector<std::string> validate(const ReactionNetwork& rn);

bool is_identifier(std::string_view s);

}  // namespace fobnn
