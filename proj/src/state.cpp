#include "fobnn/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace fobnn {

std::string format_state(const State& s, std::span<const std::string> species) {
  std::string out;
  for (std::size_t i = 0; i < s.species.size(); ++i) {
    if (i) out += ",";
    out += species[i] + "=" + to_string(s.species[i]);
  }
  for (std::size_t i = 0; i < s.derivatives.size(); ++i)
    out += ",dot(" + species[i] + ")=" + to_string(s.derivatives[i]);
  return out;
}

State parse_state(std::string_view text, std::span<const std::string> species) {
  const std::size_t n = species.size();
  std::vector<int> value(n, -1);
  std::vector<int> deriv(n, -1);
  bool any_deriv = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    start = end + 1;
    if (item.empty()) {
      if (n == 0 && text.empty()) break;
      throw std::invalid_argument("empty entry in state '" + std::string(text) + "'");
    }
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq + 2 != item.size())
      throw std::invalid_argument("expected NAME=SIGN, got '" + std::string(item) + "'");
    std::string_view name = item.substr(0, eq);
    const Sign sign = parse_sign(item[eq + 1]);
    bool is_deriv = false;
    if (name.starts_with("dot(") && name.ends_with(")")) {
      name = name.substr(4, name.size() - 5);
      is_deriv = true;
    }
    auto it = std::find(species.begin(), species.end(), name);
    if (it == species.end()) throw std::invalid_argument("unknown species '" + std::string(name) + "' in state");
    auto& slot = (is_deriv ? deriv : value)[static_cast<std::size_t>(it - species.begin())];
    if (slot != -1) throw std::invalid_argument("species '" + std::string(name) + "' given twice in state");
    slot = static_cast<int>(sign);
    any_deriv |= is_deriv;
  }
  State s;
  for (std::size_t i = 0; i < n; ++i) {
    if (value[i] == -1) throw std::invalid_argument("state does not mention species '" + species[i] + "'");
    s.species.push_back(static_cast<Sign>(value[i]));
  }
  if (any_deriv) {
    for (std::size_t i = 0; i < n; ++i) {
      if (deriv[i] == -1) throw std::invalid_argument("state does not mention dot(" + species[i] + ")");
      s.derivatives.push_back(static_cast<Sign>(deriv[i]));
    }
  }
  return s;
}

}  // namespace fobnn
