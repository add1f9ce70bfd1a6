#pragma once

// Incremental enumeration over an encoded FOBNN: transitions by blocking
// clauses, state transition graphs, and fixed points via guarded loop
// equalities.

#include "fobnn/encode.hpp"
#include "fobnn/graph.hpp"
#include "fobnn/sat_backend.hpp"
#include "fobnn/state.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace fobnn {

inline constexpr std::size_t kStgSpeciesLimit = 12;
inline constexpr std::size_t kDefaultLoopLimit = 5000;

struct FixedPointResult {
  std::vector<State> states;
  std::size_t candidates = 0;
  bool exhausted = false;  // false when loop_limit cut the search
};

class SolverSession {
 public:
  explicit SolverSession(Encoding encoding, const std::string& backend = default_backend_name());

  const Encoding& encoding() const { return enc_; }
  const std::vector<std::string>& species() const { return enc_.species; }
  std::string backend_name() const { return backend_->name(); }

  bool solve(std::span<const int> assumptions = {});

  /// Reads the last model. Throws std::logic_error on a (1,1) pair.
  Transition decode_model(bool extended) const;

  /// Two literals per species; derivative literals too for extended states.
  std::vector<int> assumptions_for_state(const State& s) const;

  /// Permanent clause excluding `t` over the state variables it covers.
  void block_transition(const Transition& t);

  std::size_t blocked_count() const { return blocked_.size(); }

  /// Solve, decode, block until UNSAT or `limit` transitions.
  std::vector<Transition> enumerate_transitions(std::optional<std::size_t> limit = std::nullopt,
                                                const std::optional<State>& start = std::nullopt,
                                                bool extended = false);

  /// Exhaustive enumeration. Throws GuardError above kStgSpeciesLimit
  /// species unless `force`.
  TransitionGraph build_stg(bool extended = false, bool force = false);

  /// Base fixed points, sorted. Expects no earlier enumeration on this session since
  /// blocked loops are never proposed as candidates.
  FixedPointResult find_fixed_points(std::size_t loop_limit = kDefaultLoopLimit);

 private:
  int fresh_var();
  void add_clause(const Clause& c);
  Sign decode(VarPair p) const;
  VarPair pair(VarKind kind, const std::string& species) const;
  std::vector<std::pair<VarPair, Sign>> literals_of(const Transition& t) const;

  Encoding enc_;
  std::unique_ptr<SatBackend> backend_;
  std::set<Transition> blocked_;
  int next_var_;
  int loop_flag_ = 0;
};

SolverSession open_session(Encoding encoding, const std::string& backend = default_backend_name());

}  // namespace fobnn
