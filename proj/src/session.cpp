#include "fobnn/session.hpp"

#include "fobnn/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace fobnn {

SolverSession::SolverSession(Encoding encoding, const std::string& backend)
    : enc_(std::move(encoding)), backend_(make_backend(backend)), next_var_(enc_.registry.num_vars() + 1) {
  backend_->reserve(enc_.cnf.num_vars);
  for (const auto& c : enc_.cnf.clauses) backend_->add_clause(c);
}

SolverSession open_session(Encoding encoding, const std::string& backend) {
  return SolverSession(std::move(encoding), backend);
}

int SolverSession::fresh_var() {
  backend_->reserve(next_var_);
  return next_var_++;
}

void SolverSession::add_clause(const Clause& c) { backend_->add_clause(c); }

bool SolverSession::solve(std::span<const int> assumptions) { return backend_->solve(assumptions); }

Sign SolverSession::decode(VarPair p) const {
  const bool b0 = backend_->value(p.pos);
  const bool b1 = backend_->value(p.neg);
  if (b0 && b1) throw std::logic_error("model sets both bits of a sign variable");
  return b0 ? Sign::Pos : b1 ? Sign::Neg : Sign::Zero;
}

VarPair SolverSession::pair(VarKind kind, const std::string& species) const {
  return enc_.registry.at(AnnotatedVar{species, kind, 0});
}

Transition SolverSession::decode_model(bool extended) const {
  Transition t;
  for (const auto& x : enc_.species) {
    t.from.species.push_back(decode(pair(VarKind::Current, x)));
    t.to.species.push_back(decode(pair(VarKind::Next, x)));
    if (extended) {
      t.from.derivatives.push_back(decode(pair(VarKind::Dot, x)));
      t.to.derivatives.push_back(decode(pair(VarKind::NextDot, x)));
    }
  }
  return t;
}

namespace {

void push_assumption(std::vector<int>& out, VarPair p, Sign s) {
  out.push_back(s == Sign::Pos ? p.pos : -p.pos);
  out.push_back(s == Sign::Neg ? p.neg : -p.neg);
}

}  // namespace

std::vector<int> SolverSession::assumptions_for_state(const State& s) const {
  if (s.species.size() != enc_.species.size()) throw std::invalid_argument("state does not match the model's species");
  std::vector<int> lits;
  for (std::size_t i = 0; i < s.species.size(); ++i) push_assumption(lits, pair(VarKind::Current, enc_.species[i]), s.species[i]);
  for (std::size_t i = 0; i < s.derivatives.size(); ++i)
    push_assumption(lits, pair(VarKind::Dot, enc_.species[i]), s.derivatives[i]);
  return lits;
}

std::vector<std::pair<VarPair, Sign>> SolverSession::literals_of(const Transition& t) const {
  std::vector<std::pair<VarPair, Sign>> out;
  for (std::size_t i = 0; i < enc_.species.size(); ++i) {
    const auto& x = enc_.species[i];
    out.emplace_back(pair(VarKind::Current, x), t.from.species.at(i));
    out.emplace_back(pair(VarKind::Next, x), t.to.species.at(i));
  }
  for (std::size_t i = 0; i < t.from.derivatives.size(); ++i) {
    const auto& x = enc_.species[i];
    out.emplace_back(pair(VarKind::Dot, x), t.from.derivatives[i]);
    out.emplace_back(pair(VarKind::NextDot, x), t.to.derivatives.at(i));
  }
  return out;
}

void SolverSession::block_transition(const Transition& t) {
  Clause c;
  for (const auto& [p, s] : literals_of(t)) {
    switch (s) {
      case Sign::Pos: c.push_back(-p.pos), c.push_back(p.neg); break;
      case Sign::Neg: c.push_back(p.pos), c.push_back(-p.neg); break;
      case Sign::Zero: c.push_back(p.pos), c.push_back(p.neg); break;
    }
  }
  add_clause(c);
  blocked_.insert(t);
}

std::vector<Transition> SolverSession::enumerate_transitions(std::optional<std::size_t> limit,
                                                             const std::optional<State>& start, bool extended) {
  if (limit && *limit == 0) throw std::invalid_argument("transition limit must be at least 1");
  const std::vector<int> assumptions = start ? assumptions_for_state(*start) : std::vector<int>{};
  std::vector<Transition> out;
  while ((!limit || out.size() < *limit) && solve(assumptions)) {
    Transition t = decode_model(extended);
    block_transition(t);
    out.push_back(std::move(t));
  }
  return out;
}

TransitionGraph SolverSession::build_stg(bool extended, bool force) {
  if (!force && enc_.species.size() > kStgSpeciesLimit)
    throw GuardError("refusing to build the full graph of " + std::to_string(enc_.species.size()) +
                     " species (limit " + std::to_string(kStgSpeciesLimit) + ", use --force)");
  TransitionGraph g;
  g.kind = extended ? GraphKind::FobnnExtended : GraphKind::FobnnBase;
  g.species = enc_.species;
  g.metadata["backend"] = backend_name();
  for (auto& t : enumerate_transitions(std::nullopt, std::nullopt, extended)) g.add_edge(t);
  return g;
}

FixedPointResult SolverSession::find_fixed_points(std::size_t loop_limit) {
  if (loop_flag_ == 0) {
    loop_flag_ = fresh_var();
    for (const auto& x : enc_.species) {
      const VarPair a = pair(VarKind::Current, x);
      const VarPair b = pair(VarKind::Next, x);
      add_clause({-loop_flag_, -a.pos, b.pos});
      add_clause({-loop_flag_, -b.pos, a.pos});
      add_clause({-loop_flag_, -a.neg, b.neg});
      add_clause({-loop_flag_, -b.neg, a.neg});
    }
  }

  FixedPointResult result;
  const std::vector<int> loop{loop_flag_};
  while (result.candidates < loop_limit) {
    if (!solve(loop)) {
      result.exhausted = true;
      break;
    }
    ++result.candidates;
    const State sigma = decode_model(false).from;

    const int guard = fresh_var();
    Clause differ{-guard};
    for (std::size_t i = 0; i < enc_.species.size(); ++i) {
      const VarPair next = pair(VarKind::Next, enc_.species[i]);
      if (sigma.species[i] == Sign::Pos) {
        differ.push_back(-next.pos);
      } else {
        differ.push_back(next.pos);
        differ.push_back(next.neg);
      }
    }
    add_clause(differ);
    std::vector<int> escape = assumptions_for_state(sigma);
    escape.push_back(guard);
    const bool escapes = solve(escape);
    add_clause({-guard});

    if (!escapes) result.states.push_back(sigma);
    block_transition({sigma, sigma});
  }
  if (!result.exhausted && !solve(loop)) result.exhausted = true;
  std::sort(result.states.begin(), result.states.end());
  return result;
}

}  // namespace fobnn
