#include "fobnn/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fobnn {

InputFormat guess_format(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  return ext == ".xml" || ext == ".sbml" ? InputFormat::CoreSbml : InputFormat::Native;
}

ReactionNetwork load_network(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return format == InputFormat::CoreSbml ? parse_coresbml(buf.str()) : parse_native(buf.str());
}

std::vector<std::string> mass_action_species(const ReactionNetwork& rn, const std::string& mode) {
  if (mode == "off" || mode.empty()) return {};
  if (mode == "all") return rn.species;
  if (mode == "auto") return detect_mass_action(rn);
  std::vector<std::string> out;
  std::istringstream in(mode);
  for (std::string item; std::getline(in, item, ',');) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!rn.has_species(item)) throw InputError("mass-action list names unknown species '" + item + "'");
    out.push_back(item);
  }
  return out;
}

Fobnn prepare_fobnn(const ReactionNetwork& rn, const ModelOptions& opts) {
  Fobnn f = build_fobnn(build_odes(rn));
  f = add_mass_action_constraints(std::move(f), mass_action_species(rn, opts.mass_action));
  if (!opts.constraints.empty()) f = add_constraint_text(std::move(f), opts.constraints);
  if (opts.derivative_zero) f = add_derivative_zero_constraints(std::move(f));
  return f;
}

}  // namespace fobnn
