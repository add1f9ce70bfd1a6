#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fobnn {

/// Incremental satisfiability backend: permanent clauses, per-call
/// assumptions, model access after a satisfiable call. Literals use DIMACS
/// conventions.
class SatBackend {
 public:
  virtual ~SatBackend() = default;

  virtual std::string name() const = 0;

  /// Makes variables 1..num_vars known to the solver.
  virtual void reserve(int num_vars) = 0;

  virtual void add_clause(std::span<const int> clause) = 0;

  /// Assumptions hold only for this call.
  virtual bool solve(std::span<const int> assumptions) = 0;

  /// Truth value of `var` in the last model.
  virtual bool value(int var) const = 0;
};

/// "picosat" or "cdcl". Throws std::invalid_argument for unknown names.
std::unique_ptr<SatBackend> make_backend(std::string_view name);

std::vector<std::string> available_backends();

/// FOBNN_SAT_BACKEND when set, otherwise "picosat".
std::string default_backend_name();

}  // namespace fobnn
