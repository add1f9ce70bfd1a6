#pragma once

// Flattening of FOBNN atoms into v = c | v = f(v1, v2) | v = v' form and the
// two-bits-per-sign propositional encoding.
//
// A sign variable v is represented by propositional variables (v0, v1):
//   + : v0 & !v1      - : !v0 & v1      0 : !v0 & !v1
// and (1, 1) is excluded by a binary clause.

#include "fobnn/fobnn.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace fobnn {

struct ConstDef {
  AnnotatedVar var;
  Constant value;
};

struct OpDef {
  AnnotatedVar var;
  Op op;
  AnnotatedVar lhs;
  AnnotatedVar rhs;
};

struct Copy {
  AnnotatedVar var;
  AnnotatedVar source;
};

struct NonNeg {
  AnnotatedVar var;
};

/// var >= other, i.e. sign(var - other) in {+, 0}.
struct Ge {
  AnnotatedVar var;
  AnnotatedVar other;
};

using FlatAtom = std::variant<ConstDef, OpDef, Copy, NonNeg, Ge>;

std::string to_string(const FlatAtom& atom);

struct FlatFormula {
  std::vector<std::string> species;
  std::vector<AnnotatedVar> existentials;  // dotted variables, then helpers
  std::vector<FlatAtom> atoms;
};

/// Bottom-up, left-to-right helper introduction; one fresh helper per
/// constant occurrence and per operator occurrence, numbered from 1.
FlatFormula flatten(const Fobnn& fobnn);

struct VarPair {
  int pos;  // v0: set when the sign is +
  int neg;  // v1: set when the sign is -
};

/// Injective map from sign variables to propositional variable pairs, with
/// indices allocated contiguously from 1. Single activation variables may be
/// allocated after the pairs.
class VarRegistry {
 public:
  VarPair add(const AnnotatedVar& v);
  int add_flag(std::string name);

  std::optional<VarPair> find(const AnnotatedVar& v) const;
  VarPair at(const AnnotatedVar& v) const;  // throws std::out_of_range

  int num_vars() const { return next_ - 1; }
  const std::vector<std::pair<AnnotatedVar, VarPair>>& pairs() const { return pairs_; }
  const std::vector<std::pair<std::string, int>>& flags() const { return flags_; }

 private:
  int next_ = 1;
  std::map<AnnotatedVar, std::size_t> index_;
  std::vector<std::pair<AnnotatedVar, VarPair>> pairs_;
  std::vector<std::pair<std::string, int>> flags_;
};

using Clause = std::vector<int>;

struct Cnf {
  int num_vars = 0;
  std::vector<Clause> clauses;

  void add(Clause c) { clauses.push_back(std::move(c)); }
  void add(std::initializer_list<int> c) { clauses.emplace_back(c); }
};

struct Encoding {
  Cnf cnf;
  VarRegistry registry;
  std::vector<std::string> species;
};

/// Clauses for `v = lhs op rhs`, equivalent to the disjunction over the
/// operator's sign relation (given the (1,1) exclusions on all three pairs).
std::vector<Clause> op_def_clauses(Op op, VarPair v, VarPair lhs, VarPair rhs);

/// Clauses for `a >= b`.
std::vector<Clause> ge_clauses(VarPair a, VarPair b);

/// Registers species, next species, dotted and helper variables in that order
/// and encodes every flat atom.
Encoding encode(const FlatFormula& flat);

/// DIMACS with `c map <name> <v0> <v1>` comment lines for the registry.
std::string emit_dimacs(const Cnf& cnf, const VarRegistry& registry);

}  // namespace fobnn
