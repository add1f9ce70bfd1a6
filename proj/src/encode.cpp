#include "fobnn/encode.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace fobnn {

std::string to_string(const FlatAtom& atom) {
  return std::visit(
      [](const auto& a) -> std::string {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, ConstDef>) {
          return a.var.to_string() + " = " + a.value.to_string();
        } else if constexpr (std::is_same_v<T, OpDef>) {
          return a.var.to_string() + " = " + a.lhs.to_string() + " " + op_symbol(a.op) + " " + a.rhs.to_string();
        } else if constexpr (std::is_same_v<T, Copy>) {
          return a.var.to_string() + " = " + a.source.to_string();
        } else if constexpr (std::is_same_v<T, NonNeg>) {
          return a.var.to_string() + " >= 0";
        } else {
          return a.var.to_string() + " >= " + a.other.to_string();
        }
      },
      atom);
}

namespace {

class Flattener {
 public:
  explicit Flattener(FlatFormula& out) : out_(out) {}

  AnnotatedVar to_var(const Term& t) {
    if (t.is_var()) return t.as_var();
    if (t.is_constant()) {
      AnnotatedVar w = fresh();
      out_.atoms.push_back(ConstDef{w, t.as_constant()});
      return w;
    }
    const auto& b = t.as_binary();
    AnnotatedVar lhs = to_var(*b.lhs);
    AnnotatedVar rhs = to_var(*b.rhs);
    AnnotatedVar w = fresh();
    out_.atoms.push_back(OpDef{w, b.op, lhs, rhs});
    return w;
  }

  void atom(const Atom& a) {
    if (const auto* eq = std::get_if<EqualAtom>(&a)) {
      if (eq->lhs.is_var()) {
        out_.atoms.push_back(Copy{eq->lhs.as_var(), to_var(eq->rhs)});
      } else {
        AnnotatedVar lhs = to_var(eq->lhs);
        out_.atoms.push_back(Copy{lhs, to_var(eq->rhs)});
      }
    } else {
      out_.atoms.push_back(NonNeg{to_var(std::get<NonNegativeAtom>(a).term)});
    }
  }

 private:
  AnnotatedVar fresh() {
    AnnotatedVar w = AnnotatedVar::helper(++count_);
    out_.existentials.push_back(w);
    return w;
  }

  FlatFormula& out_;
  std::uint32_t count_ = 0;
};

int pos(VarPair p) { return p.pos; }
int neg(VarPair p) { return p.neg; }

}  // namespace

FlatFormula flatten(const Fobnn& fobnn) {
  FlatFormula flat;
  flat.species = fobnn.species;
  flat.existentials = fobnn.existentials;
  Flattener f(flat);
  for (const auto& atom : fobnn.atoms) f.atom(atom);
  return flat;
}

VarPair VarRegistry::add(const AnnotatedVar& v) {
  if (auto it = index_.find(v); it != index_.end()) return pairs_[it->second].second;
  VarPair p{next_, next_ + 1};
  next_ += 2;
  index_.emplace(v, pairs_.size());
  pairs_.emplace_back(v, p);
  return p;
}

int VarRegistry::add_flag(std::string name) {
  flags_.emplace_back(std::move(name), next_);
  return next_++;
}

std::optional<VarPair> VarRegistry::find(const AnnotatedVar& v) const {
  auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return pairs_[it->second].second;
}

VarPair VarRegistry::at(const AnnotatedVar& v) const {
  if (auto p = find(v)) return *p;
  throw std::out_of_range("unregistered variable " + v.to_string());
}

std::vector<Clause> op_def_clauses(Op op, VarPair v, VarPair a, VarPair b) {
  switch (op) {
    case Op::Add:
      return {
          {pos(a), pos(b), -pos(v)},
          {neg(a), neg(b), -neg(v)},
          {-pos(a), neg(b), pos(v)},
          {-pos(b), neg(a), pos(v)},
          {-neg(a), pos(b), neg(v)},
          {-neg(b), pos(a), neg(v)},
      };
    case Op::Sub:
      return op_def_clauses(Op::Add, v, a, VarPair{b.neg, b.pos});
    case Op::Mul:
    case Op::Div: {
      std::vector<Clause> c = {
          // + iff the operands agree and are nonzero
          {-pos(v), pos(a), neg(a)},
          {-pos(v), pos(b), neg(b)},
          {-pos(v), pos(a), neg(b)},
          {-pos(v), neg(a), pos(b)},
          {-pos(a), -pos(b), pos(v)},
          {-neg(a), -neg(b), pos(v)},
          // - iff they disagree and are nonzero
          {-neg(v), pos(a), neg(a)},
          {-neg(v), pos(b), neg(b)},
          {-neg(v), pos(a), pos(b)},
          {-neg(v), neg(a), neg(b)},
          {-pos(a), -neg(b), neg(v)},
          {-neg(a), -pos(b), neg(v)},
      };
      if (op == Op::Div) c.push_back({pos(b), neg(b)});
      return c;
    }
  }
  return {};
}

std::vector<Clause> ge_clauses(VarPair a, VarPair b) {
  return {
      {pos(a), neg(a), -pos(b)},
      {-neg(a), -pos(b)},
      {-neg(a), pos(b), neg(b)},
  };
}

Encoding encode(const FlatFormula& flat) {
  Encoding enc;
  enc.species = flat.species;
  VarRegistry& reg = enc.registry;
  for (const auto& x : flat.species) reg.add(AnnotatedVar::current(x));
  for (const auto& x : flat.species) reg.add(AnnotatedVar::next(x));
  for (const auto& x : flat.species) reg.add(AnnotatedVar::dot(x));
  for (const auto& x : flat.species) reg.add(AnnotatedVar::next_dot(x));
  for (const auto& v : flat.existentials) reg.add(v);
  auto lookup = [&](const AnnotatedVar& v) {
    if (auto p = reg.find(v)) return *p;
    throw std::invalid_argument("flat atom mentions unbound variable " + v.to_string());
  };

  Cnf& cnf = enc.cnf;
  for (const auto& [v, p] : reg.pairs()) cnf.add({-p.pos, -p.neg});

  std::set<int> units;
  auto unit = [&](int lit) {
    if (units.insert(lit).second) cnf.add({lit});
  };
  for (const auto& x : flat.species) {
    unit(-reg.at(AnnotatedVar::current(x)).neg);
    unit(-reg.at(AnnotatedVar::next(x)).neg);
  }

  for (const auto& atom : flat.atoms) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, ConstDef>) {
            const VarPair p = lookup(a.var);
            switch (sign_of(a.value)) {
              case Sign::Pos: cnf.add({p.pos}), cnf.add({-p.neg}); break;
              case Sign::Neg: cnf.add({-p.pos}), cnf.add({p.neg}); break;
              case Sign::Zero: cnf.add({-p.pos}), cnf.add({-p.neg}); break;
            }
          } else if constexpr (std::is_same_v<T, OpDef>) {
            for (auto& c : op_def_clauses(a.op, lookup(a.var), lookup(a.lhs), lookup(a.rhs)))
              cnf.add(std::move(c));
          } else if constexpr (std::is_same_v<T, Copy>) {
            const VarPair v = lookup(a.var);
            const VarPair u = lookup(a.source);
            cnf.add({-v.pos, u.pos});
            cnf.add({v.pos, -u.pos});
            cnf.add({-v.neg, u.neg});
            cnf.add({v.neg, -u.neg});
          } else if constexpr (std::is_same_v<T, NonNeg>) {
            unit(-lookup(a.var).neg);
          } else {
            for (auto& c : ge_clauses(lookup(a.var), lookup(a.other))) cnf.add(std::move(c));
          }
        },
        atom);
  }
  cnf.num_vars = reg.num_vars();
  return enc;
}

std::string emit_dimacs(const Cnf& cnf, const VarRegistry& registry) {
  std::ostringstream out;
  for (const auto& [v, p] : registry.pairs()) out << "c map " << v.to_string() << " " << p.pos << " " << p.neg << "\n";
  for (const auto& [name, idx] : registry.flags()) out << "c flag " << name << " " << idx << "\n";
  out << "p cnf " << cnf.num_vars << " " << cnf.clauses.size() << "\n";
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) out << lit << " ";
    out << "0\n";
  }
  return out.str();
}

}  // namespace fobnn
