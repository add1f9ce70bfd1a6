#pragma once

#include "fobnn/encode.hpp"
#include "fobnn/fobnn.hpp"
#include "fobnn/network.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace fobnn {

enum class InputFormat { Native, CoreSbml };

/// `.xml` and `.sbml` files are CoreSBML, everything else native.
InputFormat guess_format(const std::filesystem::path& path);

/// Reads and parses a model file. Throws InputError (also for unreadable files).
ReactionNetwork load_network(const std::filesystem::path& path, InputFormat format);

struct ModelOptions {
  /// "auto", "all", "off", or a comma-separated species list.
  std::string mass_action = "off";
  std::string constraints;  // extra constraint text, may be empty
  bool derivative_zero = false;
};

/// Species receiving mass-action constraints under `mode`.
std::vector<std::string> mass_action_species(const ReactionNetwork& rn, const std::string& mode);

Fobnn prepare_fobnn(const ReactionNetwork& rn, const ModelOptions& opts);

inline Encoding encode_fobnn(const Fobnn& f) { return encode(flatten(f)); }

}  // namespace fobnn
