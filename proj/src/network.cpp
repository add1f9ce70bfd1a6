#include "fobnn/network.hpp"

#include "fobnn/expression.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace fobnn {

InputError::InputError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ": " + what
                                  : what),
      line_(line),
      column_(column) {}

namespace {

Rational pool_coefficient(const Pool& pool, std::string_view species) {
  Rational total = 0;
  for (const auto& [name, coef] : pool)
    if (name == species) total += coef;
  return total;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Column (1-based) of `part` inside `line`, both views into the same buffer.
int column_of(std::string_view line, std::string_view part) {
  return static_cast<int>(part.data() - line.data()) + 1;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

struct Line {
  int number;
  std::string_view text;  // comment stripped, not trimmed
};

class NativeParser {
 public:
  explicit NativeParser(std::string_view text) {
    int number = 0;
    for (std::string_view raw : split(text, '\n')) {
      ++number;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      if (!trim(raw).empty()) lines_.push_back({number, raw});
    }
  }

  ReactionNetwork parse() {
    std::vector<const Line*> reaction_lines;
    for (const auto& line : lines_) {
      std::string_view body = trim(line.text);
      if (starts_with_keyword(body, "species") && trim(body.substr(7)).starts_with(":")) {
        parse_species(line, trim(body.substr(7)).substr(1));
      } else if (starts_with_keyword(body, "const")) {
        parse_const(line, body.substr(5));
      } else {
        reaction_lines.push_back(&line);
      }
    }
    for (const Line* line : reaction_lines) parse_reaction(*line);
    return std::move(rn_);
  }

 private:
  static bool starts_with_keyword(std::string_view body, std::string_view kw) {
    return body.starts_with(kw) &&
           (body.size() == kw.size() ||
            !(std::isalnum(static_cast<unsigned char>(body[kw.size()])) || body[kw.size()] == '_'));
  }

  void declare(const Line& line, std::string_view name) {
    if (!is_identifier(name))
      throw InputError("invalid identifier '" + std::string(name) + "'", line.number, column_of(line.text, name));
    if (!symbols_.insert(std::string(name)).second)
      throw InputError("duplicate declaration of '" + std::string(name) + "'", line.number,
                       column_of(line.text, name));
  }

  void parse_species(const Line& line, std::string_view list) {
    if (trim(list).empty()) return;
    for (std::string_view item : split(list, ',')) {
      std::string_view name = trim(item);
      if (name.empty()) throw InputError("empty species name", line.number, column_of(line.text, item));
      declare(line, name);
      rn_.species.emplace_back(name);
    }
  }

  void parse_const(const Line& line, std::string_view rest) {
    std::string_view t = trim(rest);
    std::size_t end = 0;
    while (end < t.size() && (std::isalnum(static_cast<unsigned char>(t[end])) || t[end] == '_')) ++end;
    std::string_view name = t.substr(0, end);
    if (name.empty()) throw InputError("expected constant name", line.number, column_of(line.text, t));
    declare(line, name);
    std::string_view spec = trim(t.substr(end));
    if (spec.starts_with(">")) {
      if (trim(spec.substr(1)) != "0")
        throw InputError("expected '> 0'", line.number, column_of(line.text, spec));
      rn_.constants.push_back({std::string(name), std::nullopt});
      return;
    }
    if (spec.starts_with("=")) {
      std::string_view number = trim(spec.substr(1));
      bool negative = false;
      if (number.starts_with("-") || number.starts_with("+")) {
        negative = number.front() == '-';
        number = trim(number.substr(1));
      }
      try {
        Rational v = parse_decimal(number);
        rn_.constants.push_back({std::string(name), negative ? Rational(-v) : v});
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what(), line.number, column_of(line.text, number));
      }
      return;
    }
    throw InputError("expected '> 0' or '= <number>'", line.number, column_of(line.text, spec));
  }

  Pool parse_pool(const Line& line, std::string_view text) {
    Pool pool;
    if (trim(text).empty()) return pool;
    for (std::string_view item : split(text, '+')) {
      std::string_view entry = trim(item);
      if (entry.empty()) throw InputError("empty pool entry", line.number, column_of(line.text, item));
      Rational coef = 1;
      std::string_view name = entry;
      if (auto star = entry.find('*'); star != std::string_view::npos) {
        std::string_view number = trim(entry.substr(0, star));
        name = trim(entry.substr(star + 1));
        try {
          coef = parse_decimal(number);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what(), line.number, column_of(line.text, number));
        }
      }
      if (!rn_.has_species(name))
        throw InputError("undeclared species '" + std::string(name) + "'", line.number,
                         column_of(line.text, name));
      auto it = std::find_if(pool.begin(), pool.end(), [&](const auto& e) { return e.first == name; });
      if (it == pool.end()) pool.emplace_back(std::string(name), coef);
      else it->second += coef;
    }
    return pool;
  }

  void parse_reaction(const Line& line) {
    std::string_view body = line.text;
    const auto colon = body.find(':');
    if (colon == std::string_view::npos)
      throw InputError("expected 'species:', 'const' or '<id>: ... => ... @ <kinetics>'", line.number,
                       column_of(line.text, trim(body)));
    std::string_view id = trim(body.substr(0, colon));
    if (!is_identifier(id))
      throw InputError("invalid reaction id '" + std::string(id) + "'", line.number, column_of(line.text, trim(body)));
    for (const auto& r : rn_.reactions)
      if (r.id == id) throw InputError("duplicate reaction id '" + std::string(id) + "'", line.number, column_of(line.text, id));

    std::string_view rest = body.substr(colon + 1);
    const auto arrow = rest.find("=>");
    if (arrow == std::string_view::npos)
      throw InputError("expected '=>'", line.number, column_of(line.text, rest) + static_cast<int>(rest.size()));
    const auto at = rest.find('@', arrow);
    if (at == std::string_view::npos)
      throw InputError("expected '@' before kinetics", line.number, column_of(line.text, rest) + static_cast<int>(rest.size()));

    Reaction r;
    r.id = std::string(id);
    r.reactants = parse_pool(line, rest.substr(0, arrow));
    r.products = parse_pool(line, rest.substr(arrow + 2, at - arrow - 2));
    if (r.reactants.empty() && r.products.empty())
      throw InputError("reaction '" + r.id + "' has neither reactants nor products", line.number, column_of(line.text, id));

    std::string_view kinetics = rest.substr(at + 1);
    if (trim(kinetics).empty())
      throw InputError("missing kinetic expression", line.number, column_of(line.text, kinetics));
    auto resolver = [this](std::string_view name, bool primed) -> Term {
      if (primed) throw InputError("primed variable in kinetics");
      if (rn_.has_species(name)) return Term::var(AnnotatedVar::current(std::string(name)));
      if (const auto* c = rn_.find_constant(name)) {
        return Term::constant(c->value ? Constant::named(c->name, *c->value) : Constant::symbolic(c->name));
      }
      throw InputError("undeclared symbol '" + std::string(name) + "'");
    };
    r.kinetics = parse_expression(kinetics, resolver, line.number, column_of(line.text, kinetics) - 1);
    rn_.reactions.push_back(std::move(r));
  }

  std::vector<Line> lines_;
  std::set<std::string> symbols_;
  ReactionNetwork rn_;
};

std::string render_pool(const Pool& pool) {
  std::string out;
  for (const auto& [name, coef] : pool) {
    if (!out.empty()) out += " + ";
    if (coef != 1) out += format_rational(coef) + "*";
    out += name;
  }
  return out;
}

void collect_symbols(const Term& t, std::set<std::string>& species, std::set<std::string>& constants,
                     std::vector<std::string>& other) {
  if (t.is_var()) {
    const auto& v = t.as_var();
    if (v.kind == VarKind::Current) species.insert(v.base);
    else other.push_back(v.to_string());
  } else if (t.is_constant()) {
    if (t.as_constant().name) constants.insert(*t.as_constant().name);
  } else {
    collect_symbols(*t.as_binary().lhs, species, constants, other);
    collect_symbols(*t.as_binary().rhs, species, constants, other);
  }
}

}  // namespace

Rational Reaction::reactant_coefficient(std::string_view species) const {
  return pool_coefficient(reactants, species);
}

Rational Reaction::product_coefficient(std::string_view species) const {
  return pool_coefficient(products, species);
}

bool ReactionNetwork::has_species(std::string_view name) const {
  return std::find(species.begin(), species.end(), name) != species.end();
}

const RateConstant* ReactionNetwork::find_constant(std::string_view name) const {
  for (const auto& c : constants)
    if (c.name == name) return &c;
  return nullptr;
}

std::size_t ReactionNetwork::species_index(std::string_view name) const {
  auto it = std::find(species.begin(), species.end(), name);
  if (it == species.end()) throw std::out_of_range("unknown species '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - species.begin());
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

ReactionNetwork parse_native(std::string_view text) { return NativeParser(text).parse(); }

std::string render_native(const ReactionNetwork& rn) {
  std::ostringstream out;
  out << "species:";
  for (std::size_t i = 0; i < rn.species.size(); ++i) out << (i ? ", " : " ") << rn.species[i];
  out << "\n";
  for (const auto& c : rn.constants) {
    out << "const " << c.name;
    if (c.value) out << " = " << format_rational(*c.value) << "\n";
    else out << " > 0\n";
  }
  for (const auto& r : rn.reactions) {
    std::string lhs = render_pool(r.reactants);
    std::string rhs = render_pool(r.products);
    out << r.id << ": " << lhs << (lhs.empty() ? "=> " : " => ") << rhs << (rhs.empty() ? "@ " : " @ ")
        << r.kinetics.to_string() << "\n";
  }
  return out.str();
}

std::vector<std::string> validate(const ReactionNetwork& rn) {
  std::vector<std::string> diags;
  std::set<std::string> seen;
  for (const auto& s : rn.species) {
    if (!is_identifier(s)) diags.push_back("invalid species name '" + s + "'");
    if (!seen.insert(s).second) diags.push_back("duplicate species " + s);
  }
  for (const auto& c : rn.constants) {
    if (!is_identifier(c.name)) diags.push_back("invalid constant name '" + c.name + "'");
    if (!seen.insert(c.name).second) diags.push_back("duplicate symbol " + c.name);
  }
  std::set<std::string> ids;
  for (const auto& r : rn.reactions) {
    if (!ids.insert(r.id).second) diags.push_back("duplicate reaction id " + r.id);
    if (r.reactants.empty() && r.products.empty())
      diags.push_back("reaction " + r.id + " has neither reactants nor products");
    for (const Pool* pool : {&r.reactants, &r.products}) {
      for (const auto& [name, coef] : *pool) {
        if (!rn.has_species(name)) diags.push_back("undeclared species " + name);
        if (coef < 0) diags.push_back("negative stoichiometry for " + name + " in reaction " + r.id);
      }
    }
    std::set<std::string> species;
    std::set<std::string> constants;
    std::vector<std::string> other;
    collect_symbols(r.kinetics, species, constants, other);
    for (const auto& s : species)
      if (!rn.has_species(s)) diags.push_back("undeclared species " + s);
    for (const auto& c : constants)
      if (!rn.find_constant(c)) diags.push_back("undeclared constant " + c);
    for (const auto& o : other) diags.push_back("kinetics of reaction " + r.id + " mentions non-species variable " + o);
  }
  return diags;
}

}  // namespace fobnn
