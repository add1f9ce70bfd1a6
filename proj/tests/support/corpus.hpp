#pragma once

#include "fobnn/encode.hpp"
#include "fobnn/network.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fobnn::testing {

struct NamedNetwork {
  std::string name;
  ReactionNetwork rn;
};

/// Hand-written small networks (at most 3 species).
std::vector<NamedNetwork> handwritten_networks();

/// Random networks over at most 3 species with mass-action and rational
/// kinetics, reproducible from the seed.
std::vector<NamedNetwork> random_networks(std::size_t count, std::uint32_t seed);

/// Hand-written plus random, at least 20 entries.
std::vector<NamedNetwork> small_corpus();

ReactionNetwork renz();

/// A five-species chain with a feedback loop and a rational rate law.
ReactionNetwork five_species();

std::string data_path(const std::string& file);
std::string read_text(const std::string& path);

struct DimacsProblem {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// Strict DIMACS CNF reader: comments, one problem line, zero-terminated
/// clauses whose count matches the header.
DimacsProblem read_dimacs(const std::string& text);

}  // namespace fobnn::testing
