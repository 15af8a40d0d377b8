#pragma once

// Brute-force reference semantics for two-level rules, used to check the
// automaton compiler and the generator.

#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "twolevel/rules.hpp"

namespace oracle {

using twolevel::Alphabet;
using twolevel::PairId;
using twolevel::PairString;
using twolevel::SymbolId;
using twolevel::TwoLevelRule;

// Every pair string over feasible pairs whose lexical projection is `lexical`,
// with at most one insertion pair in each gap.
std::vector<PairString> candidates(const Alphabet& a, std::span<const SymbolId> lexical);

// Direct check of one rule against `s` framed by boundaries.
bool satisfies(const TwoLevelRule& rule, const Alphabet& a, std::span<const PairId> s);

bool accepted(std::span<const TwoLevelRule> rules, const Alphabet& a, std::span<const PairId> s);

std::set<std::string> surfaces(std::span<const TwoLevelRule> rules, const Alphabet& a,
                               std::span<const SymbolId> lexical);

// A small random grammar: alphabet text, rule text and lexical inputs.
struct Instance {
  std::string alphabet;
  std::string rules;
  std::vector<std::string> inputs;
};

Instance random_instance(std::mt19937& rng);

}  // namespace oracle
