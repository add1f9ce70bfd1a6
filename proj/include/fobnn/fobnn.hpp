#pragma once

#include "fobnn/network.hpp"
#include "fobnn/sign.hpp"
#include "fobnn/term.hpp"

#include <set>
#include <string>
#include <variant>
#include <vector>

namespace fobnn {

struct OdeEquation {
  std::string species;
  Term rhs;
};

/// One equation per species, in declaration order.
struct OdeSystem {
  std::vector<OdeEquation> equations;

  const Term& rhs(std::string_view species) const;
};

struct EqualAtom {
  Term lhs;
  Term rhs;
};

struct NonNegativeAtom {
  Term term;
};

using Atom = std::variant<EqualAtom, NonNegativeAtom>;

std::string to_string(const Atom& atom);

/// Existentially closed conjunction of atoms; species and next-species
/// variables stay free.
struct Fobnn {
  std::vector<std::string> species;
  std::vector<AnnotatedVar> existentials;
  std::vector<Atom> atoms;

  /// `exists ... . (a1 and a2 and ...)` for the reference evaluator.
  FormulaPtr to_formula() const;

  std::string to_string() const;
};

/// Xdot = sum over reactions of (products(X) - reactants(X)) * kinetics.
OdeSystem build_odes(const ReactionNetwork& rn);

/// ODE atoms, their primed copies, then per species X' = X + dot(X),
/// X >= 0 and X' >= 0.
Fobnn build_fobnn(const OdeSystem& odes);

/// Appends X' - X >= 0 for each listed species.
Fobnn add_mass_action_constraints(Fobnn fobnn, const std::vector<std::string>& species);

/// Appends dot(X) = 0 for every species.
Fobnn add_derivative_zero_constraints(Fobnn fobnn);

/// Species whose consuming reactions all have syntactic mass-action kinetics
/// k * prod(reactant^stoichiometry). Species never consumed are included.
std::vector<std::string> detect_mass_action(const ReactionNetwork& rn);

/// Parses `t1 >= t2 and t3 = t4 ...` over `X` and `X'` and appends the atoms.
/// Dotted variables are rejected since they are bound in the prefix.
Fobnn add_constraint_text(Fobnn fobnn, std::string_view text);

}  // namespace fobnn
