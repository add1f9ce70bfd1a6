#include "fobnn/oracle.hpp"

#include <algorithm>

namespace fobnn {

namespace {

void collect_vars(const Term& t, std::set<AnnotatedVar>& out) {
  if (t.is_var()) out.insert(t.as_var());
  else if (t.is_binary()) {
    collect_vars(*t.as_binary().lhs, out);
    collect_vars(*t.as_binary().rhs, out);
  }
}

bool holds(const Atom& atom, const SignAssignment& alpha) {
  if (const auto* eq = std::get_if<EqualAtom>(&atom))
    return !(eval_term(eq->lhs, alpha) & eval_term(eq->rhs, alpha)).empty();
  return !(eval_term(std::get<NonNegativeAtom>(atom).term, alpha) & SignSet::nonnegative()).empty();
}

class Enumerator {
 public:
  Enumerator(const Fobnn& f, bool extended) : f_(f), extended_(extended) {
    // Depth 0 = all free variables bound; depth d = first d existentials bound.
    checks_.resize(f.existentials.size() + 1);
    for (const auto& atom : f.atoms) {
      std::set<AnnotatedVar> vars;
      if (const auto* eq = std::get_if<EqualAtom>(&atom)) {
        collect_vars(eq->lhs, vars);
        collect_vars(eq->rhs, vars);
      } else {
        collect_vars(std::get<NonNegativeAtom>(atom).term, vars);
      }
      std::size_t depth = 0;
      for (const auto& v : vars) {
        auto it = std::find(f.existentials.begin(), f.existentials.end(), v);
        if (it != f.existentials.end())
          depth = std::max(depth, static_cast<std::size_t>(it - f.existentials.begin()) + 1);
        else if (!v.is_state() || std::find(f.species.begin(), f.species.end(), v.base) == f.species.end())
          throw std::invalid_argument("atom mentions unbound variable " + v.to_string());
      }
      checks_[depth].push_back(&atom);
    }
  }

  std::set<Transition> run() {
    const std::size_t n = f_.species.size();
    const std::size_t states = std::size_t{1} << n;
    for (std::size_t from = 0; from < states; ++from) {
      for (std::size_t to = 0; to < states; ++to) {
        for (std::size_t i = 0; i < n; ++i) {
          alpha_.bind(AnnotatedVar::current(f_.species[i]), (from >> i) & 1 ? Sign::Pos : Sign::Zero);
          alpha_.bind(AnnotatedVar::next(f_.species[i]), (to >> i) & 1 ? Sign::Pos : Sign::Zero);
        }
        search(0);
      }
    }
    return std::move(found_);
  }

 private:
  bool passes(std::size_t depth) const {
    return std::all_of(checks_[depth].begin(), checks_[depth].end(),
                       [&](const Atom* a) { return holds(*a, alpha_); });
  }

  // Returns true once a witness is found in base mode, to cut the search.
  bool search(std::size_t depth) {
    if (!passes(depth)) return false;
    if (depth == f_.existentials.size()) {
      record();
      return !extended_;
    }
    const AnnotatedVar& v = f_.existentials[depth];
    for (Sign s : kAllSigns) {
      alpha_.bind(v, s);
      if (search(depth + 1)) {
        alpha_.unbind(v);
        return true;
      }
    }
    alpha_.unbind(v);
    return false;
  }

  void record() {
    Transition t;
    for (const auto& x : f_.species) {
      t.from.species.push_back(alpha_.at(AnnotatedVar::current(x)));
      t.to.species.push_back(alpha_.at(AnnotatedVar::next(x)));
      if (extended_) {
        t.from.derivatives.push_back(alpha_.at(AnnotatedVar::dot(x)));
        t.to.derivatives.push_back(alpha_.at(AnnotatedVar::next_dot(x)));
      }
    }
    found_.insert(std::move(t));
  }

  const Fobnn& f_;
  bool extended_;
  std::vector<std::vector<const Atom*>> checks_;
  SignAssignment alpha_;
  std::set<Transition> found_;
};

}  // namespace

std::set<Transition> brute_force_transitions(const Fobnn& fobnn, bool extended) {
  if (fobnn.species.size() > kOracleSpeciesLimit)
    throw GuardError("brute-force enumeration supports at most " + std::to_string(kOracleSpeciesLimit) +
                     " species, got " + std::to_string(fobnn.species.size()));
  return Enumerator(fobnn, extended).run();
}

}  // namespace fobnn
