#include "fobnn/fobnn.hpp"

#include "fobnn/expression.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <sstream>

namespace fobnn {

const Term& OdeSystem::rhs(std::string_view species) const {
  for (const auto& eq : equations)
    if (eq.species == species) return eq.rhs;
  throw std::out_of_range("no equation for species '" + std::string(species) + "'");
}

std::string to_string(const Atom& atom) {
  if (const auto* eq = std::get_if<EqualAtom>(&atom)) return eq->lhs.to_string() + " = " + eq->rhs.to_string();
  return std::get<NonNegativeAtom>(atom).term.to_string() + " >= 0";
}

FormulaPtr Fobnn::to_formula() const {
  std::vector<FormulaPtr> parts;
  parts.reserve(atoms.size());
  for (const auto& atom : atoms) {
    if (const auto* eq = std::get_if<EqualAtom>(&atom)) parts.push_back(Formula::equal(eq->lhs, eq->rhs));
    else parts.push_back(Formula::nonnegative(std::get<NonNegativeAtom>(atom).term));
  }
  FormulaPtr body = Formula::conjunction(std::move(parts));
  for (auto it = existentials.rbegin(); it != existentials.rend(); ++it) body = Formula::exists(*it, body);
  return body;
}

std::string Fobnn::to_string() const {
  std::ostringstream out;
  out << "exists";
  for (std::size_t i = 0; i < existentials.size(); ++i) out << (i ? ", " : " ") << existentials[i].to_string();
  out << " .\n";
  for (std::size_t i = 0; i < atoms.size(); ++i) out << (i ? "  and " : "      ") << fobnn::to_string(atoms[i]) << "\n";
  return out.str();
}

namespace {

// c * (a * b) rebuilt as (c * a) * b so that 2*k*C renders without parentheses.
Term scale(const Rational& c, const Term& t) {
  if (t.is_binary() && t.as_binary().op == Op::Mul)
    return scale(c, *t.as_binary().lhs) * *t.as_binary().rhs;
  return Term::number(c) * t;
}

void collect_factors(const Term& t, std::vector<const Term*>& out) {
  if (t.is_binary() && t.as_binary().op == Op::Mul) {
    collect_factors(*t.as_binary().lhs, out);
    collect_factors(*t.as_binary().rhs, out);
  } else {
    out.push_back(&t);
  }
}

bool is_mass_action(const Reaction& r) {
  std::vector<const Term*> factors;
  collect_factors(r.kinetics, factors);
  int rate_constants = 0;
  std::map<std::string, Rational> powers;
  for (const Term* f : factors) {
    if (f->is_constant()) {
      if (sign_of(f->as_constant()) != Sign::Pos) return false;
      ++rate_constants;
    } else if (f->is_var() && f->as_var().kind == VarKind::Current) {
      powers[f->as_var().base] += 1;
    } else {
      return false;
    }
  }
  if (rate_constants == 0) return false;
  std::map<std::string, Rational> expected;
  for (const auto& [name, coef] : r.reactants) {
    if (coef == 0) continue;
    if (boost::multiprecision::denominator(coef) != 1) return false;
    expected[name] += coef;
  }
  return powers == expected;
}

}  // namespace

OdeSystem build_odes(const ReactionNetwork& rn) {
  OdeSystem odes;
  for (const auto& x : rn.species) {
    std::optional<Term> acc;
    for (const auto& r : rn.reactions) {
      const Rational coef = r.product_coefficient(x) - r.reactant_coefficient(x);
      if (coef == 0) continue;
      const Rational magnitude = coef < 0 ? Rational(-coef) : coef;
      Term summand = magnitude == 1 ? r.kinetics : scale(magnitude, r.kinetics);
      if (!acc) acc = coef > 0 ? summand : Term::negate(summand);
      else acc = coef > 0 ? *acc + summand : *acc - summand;
    }
    odes.equations.push_back({x, acc ? *acc : Term::number(0)});
  }
  return odes;
}

Fobnn build_fobnn(const OdeSystem& odes) {
  Fobnn f;
  for (const auto& eq : odes.equations) {
    f.species.push_back(eq.species);
    f.existentials.push_back(AnnotatedVar::dot(eq.species));
    f.existentials.push_back(AnnotatedVar::next_dot(eq.species));
  }
  for (const auto& eq : odes.equations)
    f.atoms.push_back(EqualAtom{Term::var(AnnotatedVar::dot(eq.species)), eq.rhs});
  for (const auto& eq : odes.equations)
    f.atoms.push_back(EqualAtom{Term::var(AnnotatedVar::next_dot(eq.species)), eq.rhs.primed()});
  for (const auto& x : f.species) {
    const Term cur = Term::var(AnnotatedVar::current(x));
    const Term next = Term::var(AnnotatedVar::next(x));
    f.atoms.push_back(EqualAtom{next, cur + Term::var(AnnotatedVar::dot(x))});
    f.atoms.push_back(NonNegativeAtom{cur});
    f.atoms.push_back(NonNegativeAtom{next});
  }
  return f;
}

Fobnn add_mass_action_constraints(Fobnn fobnn, const std::vector<std::string>& species) {
  for (const auto& x : species) {
    if (std::find(fobnn.species.begin(), fobnn.species.end(), x) == fobnn.species.end())
      throw std::invalid_argument("unknown species '" + x + "'");
  }
  for (const auto& x : species) {
    fobnn.atoms.push_back(
        NonNegativeAtom{Term::var(AnnotatedVar::next(x)) - Term::var(AnnotatedVar::current(x))});
  }
  return fobnn;
}

Fobnn add_derivative_zero_constraints(Fobnn fobnn) {
  for (const auto& x : fobnn.species)
    fobnn.atoms.push_back(EqualAtom{Term::var(AnnotatedVar::dot(x)), Term::number(0)});
  return fobnn;
}

std::vector<std::string> detect_mass_action(const ReactionNetwork& rn) {
  std::vector<std::string> out;
  for (const auto& x : rn.species) {
    bool ok = true;
    for (const auto& r : rn.reactions) {
      if (r.reactant_coefficient(x) > 0 && !is_mass_action(r)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

Fobnn add_constraint_text(Fobnn fobnn, std::string_view text) {
  auto resolver = [&](std::string_view name, bool primed) -> Term {
    if (name.starts_with("dot("))
      throw InputError("dotted variables are existentially bound and cannot be constrained");
    if (std::find(fobnn.species.begin(), fobnn.species.end(), name) == fobnn.species.end())
      throw InputError("unknown species '" + std::string(name) + "'");
    return Term::var(primed ? AnnotatedVar::next(std::string(name)) : AnnotatedVar::current(std::string(name)));
  };

  static const std::regex kAnd(R"(\band\b)");
  const std::string owned(text);
  std::vector<Atom> parsed;
  std::size_t start = 0;
  auto handle = [&](std::size_t begin, std::size_t end) {
    const std::string_view part = std::string_view(owned).substr(begin, end - begin);
    std::size_t op = part.find(">=");
    std::size_t op_len = 2;
    if (op == std::string_view::npos) {
      op = part.find('=');
      op_len = 1;
    }
    if (op == std::string_view::npos)
      throw InputError("expected '>=' or '=' in constraint", 1, static_cast<int>(begin + part.size()) + 1);
    if (part.find_first_not_of(" \t\r\n", op + op_len) == std::string_view::npos)
      throw InputError("missing right-hand side", 1, static_cast<int>(begin + op + op_len) + 1);
    Term lhs = parse_expression(part.substr(0, op), resolver, 1, static_cast<int>(begin));
    Term rhs = parse_expression(part.substr(op + op_len), resolver, 1, static_cast<int>(begin + op + op_len));
    if (op_len == 1) {
      parsed.push_back(EqualAtom{lhs, rhs});
    } else if (rhs.is_constant() && rhs.as_constant().is_literal_zero()) {
      parsed.push_back(NonNegativeAtom{lhs});
    } else {
      parsed.push_back(NonNegativeAtom{lhs - rhs});
    }
  };
  for (auto it = std::sregex_iterator(owned.begin(), owned.end(), kAnd); it != std::sregex_iterator(); ++it) {
    handle(start, static_cast<std::size_t>(it->position()));
    start = static_cast<std::size_t>(it->position() + it->length());
  }
  handle(start, owned.size());
  for (auto& a : parsed) fobnn.atoms.push_back(std::move(a));
  return fobnn;
}

}  // namespace fobnn
