#include "fobnn/network.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace fobnn {

namespace {

using boost::property_tree::ptree;

constexpr char kSep = '|';

std::string local_name(const std::string& tag) {
  auto colon = tag.rfind(':');
  return colon == std::string::npos ? tag : tag.substr(colon + 1);
}

std::string trimmed(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::optional<std::string> attribute(const ptree& node, const std::string& name) {
  if (auto attrs = node.get_child_optional("<xmlattr>")) {
    for (const auto& [key, value] : *attrs)
      if (local_name(key) == name) return value.data();
  }
  return std::nullopt;
}

// Element children only (skips attributes and comments).
std::vector<std::pair<std::string, const ptree*>> elements(const ptree& node) {
  std::vector<std::pair<std::string, const ptree*>> out;
  for (const auto& [key, child] : node) {
    if (key == "<xmlattr>" || key == "<xmlcomment>") continue;
    out.emplace_back(local_name(key), &child);
  }
  return out;
}

const ptree* child(const ptree& node, const std::string& name) {
  for (const auto& [key, c] : elements(node))
    if (key == name) return c;
  return nullptr;
}

[[noreturn]] void unsupported(const std::string& construct) {
  throw InputError("unsupported: " + construct);
}

const std::map<std::string, std::string> kRejected = {
    {"listOfEvents", "event"},
    {"event", "event"},
    {"piecewise", "piecewise"},
    {"listOfFunctionDefinitions", "functionDefinition"},
    {"functionDefinition", "functionDefinition"},
    {"lambda", "functionDefinition"},
    {"listOfRules", "rule"},
    {"assignmentRule", "rule"},
    {"rateRule", "rule"},
    {"algebraicRule", "rule"},
    {"listOfInitialAssignments", "initialAssignment"},
    {"listOfConstraints", "constraint"},
    {"stoichiometryMath", "stoichiometryMath"},
    {"delay", "delay"},
};

void reject_unsupported(const ptree& node) {
  for (const auto& [name, c] : elements(node)) {
    if (auto it = kRejected.find(name); it != kRejected.end()) unsupported(it->second);
    if (name == "csymbol") {
      const std::string url = attribute(*c, "definitionURL").value_or("");
      if (url.find("delay") != std::string::npos) unsupported("delay");
      if (url.find("time") != std::string::npos) unsupported("time");
      unsupported("csymbol");
    }
    if (name == "apply") {
      auto args = elements(*c);
      if (!args.empty() && args.front().first == "ci") unsupported("apply");
    }
    reject_unsupported(*c);
  }
}

Rational parse_signed(const std::string& raw) {
  std::string s = trimmed(raw);
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  try {
    Rational v = parse_decimal(s);
    return negative ? Rational(-v) : v;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

class SbmlReader {
 public:
  explicit SbmlReader(const ptree& model) : model_(model) {}

  ReactionNetwork read() {
    if (const auto* list = child(model_, "listOfCompartments")) {
      for (const auto& [name, c] : elements(*list)) {
        if (name != "compartment") continue;
        const std::string id = attribute(*c, "id").value_or("");
        std::optional<Rational> size;
        if (auto v = attribute(*c, "size")) size = parse_signed(*v);
        compartments_[id] = size;
      }
    }
    if (const auto* list = child(model_, "listOfSpecies")) {
      for (const auto& [name, s] : elements(*list)) {
        if (name != "species") continue;
        auto id = attribute(*s, "id");
        if (!id) throw InputError("species without id");
        if (attribute(*s, "boundaryCondition").value_or("false") == "true") unsupported("boundaryCondition");
        rn_.species.push_back(*id);
      }
    }
    if (const auto* list = child(model_, "listOfParameters")) {
      for (const auto& [name, p] : elements(*list)) {
        if (name != "parameter") continue;
        auto id = attribute(*p, "id");
        if (!id) throw InputError("parameter without id");
        std::optional<Rational> value;
        if (auto v = attribute(*p, "value")) value = parse_signed(*v);
        rn_.constants.push_back({*id, value});
      }
    }
    if (const auto* list = child(model_, "listOfReactions")) {
      for (const auto& [name, r] : elements(*list))
        if (name == "reaction") read_reaction(*r);
    }
    return std::move(rn_);
  }

 private:
  Pool read_pool(const ptree* list) {
    Pool pool;
    if (!list) return pool;
    for (const auto& [name, ref] : elements(*list)) {
      if (name != "speciesReference") continue;
      auto species = attribute(*ref, "species");
      if (!species) throw InputError("speciesReference without species attribute");
      Rational coef = 1;
      if (auto st = attribute(*ref, "stoichiometry")) coef = parse_signed(*st);
      auto it = std::find_if(pool.begin(), pool.end(), [&](const auto& e) { return e.first == *species; });
      if (it == pool.end()) pool.emplace_back(*species, coef);
      else it->second += coef;
    }
    return pool;
  }

  void read_reaction(const ptree& node) {
    Reaction r;
    r.id = attribute(node, "id").value_or("");
    r.reactants = read_pool(child(node, "listOfReactants"));
    r.products = read_pool(child(node, "listOfProducts"));
    const ptree* law = child(node, "kineticLaw");
    if (!law) throw InputError("reaction " + r.id + " has no kineticLaw");

    local_.clear();
    for (const char* list_name : {"listOfLocalParameters", "listOfParameters"}) {
      if (const auto* list = child(*law, list_name)) {
        for (const auto& [name, p] : elements(*list)) {
          if (name != "localParameter" && name != "parameter") continue;
          const std::string id = attribute(*p, "id").value_or("");
          const std::string qualified = r.id + "__" + id;
          std::optional<Rational> value;
          if (auto v = attribute(*p, "value")) value = parse_signed(*v);
          rn_.constants.push_back({qualified, value});
          local_[id] = qualified;
        }
      }
    }
    const ptree* math = child(*law, "math");
    if (!math) throw InputError("kineticLaw of reaction " + r.id + " has no math");
    auto body = elements(*math);
    if (body.size() != 1) throw InputError("kineticLaw of reaction " + r.id + " must hold one expression");
    r.kinetics = read_math(body.front().first, *body.front().second);
    rn_.reactions.push_back(std::move(r));
  }

  Term resolve(const std::string& id) {
    if (auto it = local_.find(id); it != local_.end()) return constant_term(it->second);
    if (std::find(rn_.species.begin(), rn_.species.end(), id) != rn_.species.end())
      return Term::var(AnnotatedVar::current(id));
    if (rn_.find_constant(id)) return constant_term(id);
    if (auto it = compartments_.find(id); it != compartments_.end()) {
      rn_.constants.push_back({id, it->second});
      compartments_.erase(it);
      return constant_term(id);
    }
    throw InputError("undeclared symbol '" + id + "'");
  }

  Term constant_term(const std::string& id) {
    const auto* c = rn_.find_constant(id);
    return Term::constant(c->value ? Constant::named(c->name, *c->value) : Constant::symbolic(c->name));
  }

  static Term number_term(const Rational& v) {
    return v < 0 ? Term::negate(Term::number(-v)) : Term::number(v);
  }

  Term read_number(const ptree& cn) {
    const std::string type = attribute(cn, "type").value_or("real");
    if (type == "e-notation" || type == "rational") {
      const std::string text = cn.data();
      const auto bar = text.find(kSep);
      if (bar == std::string::npos) throw InputError("cn of type " + type + " without <sep/>");
      const std::string a = trimmed(text.substr(0, bar));
      const std::string b = trimmed(text.substr(bar + 1));
      if (type == "e-notation") return number_term(parse_signed(a + "e" + b));
      return number_term(parse_signed(a) / parse_signed(b));
    }
    return number_term(parse_signed(cn.data()));
  }

  Term read_math(const std::string& name, const ptree& node) {
    if (name == "ci") return resolve(trimmed(node.data()));
    if (name == "cn") return read_number(node);
    if (name != "apply") unsupported(name);
    auto items = elements(node);
    if (items.empty()) throw InputError("empty apply");
    const std::string op = items.front().first;
    std::vector<Term> args;
    for (std::size_t i = 1; i < items.size(); ++i) {
      if (items[i].first == "bvar" || items[i].first == "degree") unsupported(items[i].first);
      args.push_back(read_math(items[i].first, *items[i].second));
    }
    auto fold = [&](Op o, Term unit) {
      if (args.empty()) return unit;
      Term acc = args.front();
      for (std::size_t i = 1; i < args.size(); ++i) acc = Term::binary(o, acc, args[i]);
      return acc;
    };
    if (op == "plus") return fold(Op::Add, Term::number(0));
    if (op == "times") return fold(Op::Mul, Term::number(1));
    if (op == "minus") {
      if (args.size() == 1) return Term::negate(args.front());
      if (args.size() == 2) return args[0] - args[1];
      throw InputError("minus expects one or two arguments");
    }
    if (op == "divide") {
      if (args.size() != 2) throw InputError("divide expects two arguments");
      return args[0] / args[1];
    }
    if (op == "power") {
      if (args.size() != 2 || !args[1].is_constant() || args[1].as_constant().name) unsupported("power");
      const Rational exponent = *args[1].as_constant().value;
      if (boost::multiprecision::denominator(exponent) != 1 || exponent < 0 || exponent > 64) unsupported("power");
      const int n = static_cast<int>(boost::multiprecision::numerator(exponent));
      if (n == 0) return Term::number(1);
      Term acc = args[0];
      for (int i = 1; i < n; ++i) acc = acc * args[0];
      return acc;
    }
    unsupported(op);
  }

  const ptree& model_;
  ReactionNetwork rn_;
  std::map<std::string, std::optional<Rational>> compartments_;
  std::map<std::string, std::string> local_;
};

}  // namespace

ReactionNetwork parse_coresbml(std::string_view xml) {
  ptree doc;
  try {
    // property_tree merges the text around <sep/>, so mark the split first
    static const std::regex sep(R"(<(\w+:)?sep\s*/>)");
    std::istringstream in{std::regex_replace(std::string(xml), sep, std::string(" ") + kSep + " ")};
    boost::property_tree::read_xml(in, doc);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw InputError(std::string("malformed XML: ") + e.message(), static_cast<int>(e.line()), 0);
  }
  reject_unsupported(doc);

  const ptree* sbml = child(doc, "sbml");
  if (!sbml) throw InputError("missing <sbml> root element");
  const ptree* model = child(*sbml, "model");
  if (!model) throw InputError("missing <model> element");
  for (const auto& [name, c] : elements(*model)) {
    static const std::set<std::string> known = {"listOfSpecies",   "listOfParameters", "listOfReactions",
                                                "listOfCompartments", "listOfUnitDefinitions", "notes",
                                                "annotation"};
    if (!known.count(name)) unsupported(name);
  }

  ReactionNetwork rn = SbmlReader(*model).read();
  if (auto diags = validate(rn); !diags.empty()) throw InputError(diags.front());
  return rn;
}

}  // namespace fobnn
