#include "corpus.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace fobnn::testing {

namespace {

const char* const kHandwritten[][2] = {
    {"decay", "species: A\nconst k > 0\nr: A => @ k*A\n"},
    {"inflow", "species: A\nconst k > 0\nr: => A @ k\n"},
    {"conversion", "species: A, B\nconst k > 0\nr: A => B @ k*A\n"},
    {"reversible", "species: A, B\nconst kf > 0\nconst kb > 0\nf: A => B @ kf*A\nb: B => A @ kb*B\n"},
    {"dimerisation", "species: A, B\nconst k > 0\nr: 2*A => B @ k*A*A\n"},
    {"autocatalysis", "species: A, B\nconst k > 0\nr: A + B => 2*B @ k*A*B\n"},
    {"chain", "species: A, B, C\nconst k1 > 0\nconst k2 > 0\nr1: A => B @ k1*A\nr2: B => C @ k2*B\n"},
    {"michaelis_menten", "species: S, P\nconst V > 0\nconst Km > 0\nr: S => P @ V*S/(Km + S)\n"},
    {"hill_like", "species: A, B, C\nconst V > 0\nconst K > 0\nr: A => B @ V*A*C/(K + C*C)\n"},
    {"negative_constant", "species: A, B\nconst k = -0.5\nr: A => B @ k*A\n"},
    {"zero_constant", "species: A, B\nconst k = 0\nr: A => B @ k*A + A\n"},
    {"difference_rate", "species: A, B\nconst k1 > 0\nconst k2 > 0\nr: A => B @ k1*A - k2*B\n"},
    {"mixed", "species: X, Y, Z\nconst a > 0\nconst b > 0\nr1: X + Y => Z @ a*X*Y\nr2: Z => X @ b*Z/(1 + Y)\n"},
};

}  // namespace

std::vector<NamedNetwork> handwritten_networks() {
  std::vector<NamedNetwork> out;
  for (const auto& [name, text] : kHandwritten) out.push_back({name, parse_native(text)});
  return out;
}

std::vector<NamedNetwork> random_networks(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const char* names[] = {"A", "B", "C"};
  std::vector<NamedNetwork> out;
  for (std::size_t n = 0; n < count; ++n) {
    const int ns = pick(1, 3);
    const int nr = pick(1, 3);
    std::ostringstream text;
    text << "species: ";
    for (int i = 0; i < ns; ++i) text << (i ? ", " : "") << names[i];
    text << "\n";
    for (int r = 0; r < nr; ++r) text << "const k" << r << " > 0\n";
    text << "const K > 0\nconst c = " << (pick(0, 1) ? "-" : "") << pick(0, 3) << ".5\n";

    auto pool = [&](std::vector<std::pair<int, int>>& items) {
      std::string s;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += " + ";
        if (items[i].second > 1) s += std::to_string(items[i].second) + "*";
        s += names[items[i].first];
      }
      return s;
    };
    for (int r = 0; r < nr; ++r) {
      std::vector<std::pair<int, int>> reactants;
      std::vector<std::pair<int, int>> products;
      for (int i = 0; i < ns; ++i) {
        if (pick(0, 2) == 0) reactants.emplace_back(i, pick(1, 2));
        else if (pick(0, 2) == 0) products.emplace_back(i, pick(1, 2));
      }
      if (reactants.empty() && products.empty()) products.emplace_back(pick(0, ns - 1), 1);

      std::string rate = "k" + std::to_string(r);
      for (const auto& [i, c] : reactants)
        for (int j = 0; j < c; ++j) rate += std::string("*") + names[i];
      switch (pick(0, 3)) {
        case 0: break;  // mass action
        case 1: rate += std::string("/(K + ") + names[pick(0, ns - 1)] + ")"; break;
        case 2: rate += std::string(" + c*") + names[pick(0, ns - 1)]; break;
        default: rate = "(" + rate + " - " + names[pick(0, ns - 1)] + ")/K"; break;
      }
      text << "r" << r << ": " << pool(reactants) << " => " << pool(products) << " @ " << rate << "\n";
    }
    out.push_back({"random_" + std::to_string(n), parse_native(text.str())});
  }
  return out;
}

std::vector<NamedNetwork> small_corpus() {
  auto out = handwritten_networks();
  for (auto& n : random_networks(16, 20240917)) out.push_back(std::move(n));
  return out;
}

std::string data_path(const std::string& file) { return std::string(FOBNN_TEST_DATA) + "/" + file; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ReactionNetwork renz() { return parse_native(read_text(data_path("renz.rn"))); }

ReactionNetwork five_species() { return parse_native(read_text(data_path("five.rn"))); }

DimacsProblem read_dimacs(const std::string& text) {
  std::istringstream in(text);
  DimacsProblem p;
  long declared = -1;
  Clause current;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p_tok, fmt;
      if (declared >= 0) throw std::runtime_error("second problem line");
      if (!(ls >> p_tok >> fmt >> p.num_vars >> declared) || fmt != "cnf") throw std::runtime_error("bad problem line");
      continue;
    }
    if (declared < 0) throw std::runtime_error("clause before problem line");
    for (int lit; ls >> lit;) {
      if (lit == 0) {
        p.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::abs(lit) > p.num_vars) throw std::runtime_error("literal out of range");
        current.push_back(lit);
      }
    }
    if (!ls.eof()) throw std::runtime_error("bad token in clause line");
  }
  if (!current.empty()) throw std::runtime_error("unterminated clause");
  if (static_cast<long>(p.clauses.size()) != declared) throw std::runtime_error("clause count mismatch");
  return p;
}

}  // namespace fobnn::testing
