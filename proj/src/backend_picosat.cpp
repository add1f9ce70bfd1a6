#include "fobnn/sat_backend.hpp"

extern "C" {
#include "picosat.h"
}

#include <cstdlib>
#include <stdexcept>

namespace fobnn {

std::unique_ptr<SatBackend> make_cdcl_backend();

namespace {

class PicosatBackend final : public SatBackend {
 public:
  PicosatBackend() : ps_(picosat_init()) {
    if (!ps_) throw std::runtime_error("picosat_init failed");
  }
  ~PicosatBackend() override { picosat_reset(ps_); }

  PicosatBackend(const PicosatBackend&) = delete;
  PicosatBackend& operator=(const PicosatBackend&) = delete;

  std::string name() const override { return "picosat"; }

  void reserve(int num_vars) override {
    if (num_vars > max_var_) {
      picosat_adjust(ps_, num_vars);
      max_var_ = num_vars;
    }
  }

  void add_clause(std::span<const int> clause) override {
    for (int lit : clause) reserve(std::abs(lit));
    for (int lit : clause) picosat_add(ps_, lit);
    picosat_add(ps_, 0);
  }

  bool solve(std::span<const int> assumptions) override {
    for (int lit : assumptions) {
      reserve(std::abs(lit));
      picosat_assume(ps_, lit);
    }
    const int res = picosat_sat(ps_, -1);
    if (res == PICOSAT_SATISFIABLE) {
      model_.assign(static_cast<std::size_t>(max_var_) + 1, false);
      for (int v = 1; v <= max_var_; ++v) model_[static_cast<std::size_t>(v)] = picosat_deref(ps_, v) == 1;
      return true;
    }
    if (res != PICOSAT_UNSATISFIABLE) throw std::runtime_error("picosat returned unknown");
    return false;
  }

  bool value(int var) const override {
    if (var <= 0 || static_cast<std::size_t>(var) >= model_.size()) return false;
    return model_[static_cast<std::size_t>(var)];
  }

 private:
  PicoSAT* ps_;
  int max_var_ = 0;
  std::vector<bool> model_;
};

}  // namespace

std::unique_ptr<SatBackend> make_backend(std::string_view name) {
  if (name == "picosat") return std::make_unique<PicosatBackend>();
  if (name == "cdcl") return make_cdcl_backend();
  throw std::invalid_argument("unknown SAT backend '" + std::string(name) + "' (available: picosat, cdcl)");
}

std::vector<std::string> available_backends() { return {"picosat", "cdcl"}; }

std::string default_backend_name() {
  if (const char* env = std::getenv("FOBNN_SAT_BACKEND"); env && *env) return env;
  return "picosat";
}

}  // namespace fobnn
