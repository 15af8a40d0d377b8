#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twolevel/alphabet.hpp"
#include "twolevel/automaton.hpp"

namespace twolevel {

/// Regular expression over feasible pairs used in rule contexts.
struct ContextRegex {
  enum class Kind { Atom, Boundary, Concat, Union, Optional, Star, Plus };

  Kind kind = Kind::Concat;
  std::vector<PairId> pairs;  ///< Atom: matching pairs, sorted
  std::vector<ContextRegex> children;
  std::string text;  ///< source spelling of an atom

  /// Empty concatenation: matches the empty string.
  static ContextRegex epsilon() { return {}; }
};

enum class RuleOperator {
  Biconditional,  ///< <=>
  Restriction,    ///< =>
  Coercion,       ///< <=
  Prohibition,    ///< /<=
};

std::string_view to_string(RuleOperator op);

struct RuleContext {
  ContextRegex left;
  ContextRegex right;
  std::string text;  ///< `LEFT _ RIGHT` as written
  int line = 0;
};

struct TwoLevelRule {
  std::string name;
  SymbolPair center;
  RuleOperator op = RuleOperator::Biconditional;
  std::vector<RuleContext> contexts;
  int line = 0;

  bool restricts() const {
    return op == RuleOperator::Biconditional || op == RuleOperator::Restriction;
  }
  bool coerces() const {
    return op == RuleOperator::Biconditional || op == RuleOperator::Coercion;
  }
};

/// Parses a rule file: `"Name"`, then `center OP LEFT _ RIGHT ;` and further
/// `LEFT _ RIGHT ;` lines.
std::vector<TwoLevelRule> parse_rules(std::string_view text, const Alphabet& alphabet,
                                      const std::string& source = "");

/// Compiled rule. Labels are pair ids; label `boundary()` is the word
/// boundary `#` framing every pair string.
struct RuleAutomaton {
  TwoLevelRule rule;
  fsa::Dfa dfa;
  std::vector<bool> live;
  /// Per context: strings ending in LEFT, strings starting with RIGHT.
  std::vector<std::pair<fsa::Dfa, fsa::Dfa>> context_languages;
  std::vector<std::string> warnings;
};

RuleAutomaton compile_rule(const TwoLevelRule& rule, const Alphabet& alphabet);

/// Language of a context expression as a deterministic automaton.
fsa::Dfa compile_regex(const ContextRegex& re, const Alphabet& alphabet);

inline fsa::Label boundary_label(const Alphabet& a) {
  return static_cast<fsa::Label>(a.pairs().size());
}

using PairString = std::vector<PairId>;

/// True iff every automaton accepts `#s#`. Throws ContentError on a pair id
/// outside the alphabet.
bool accepts(std::span<const RuleAutomaton> rules, const Alphabet& alphabet,
             std::span<const PairId> s);

/// Parses `k a:0 ^N1:0` style pair strings (bare symbols are identities).
PairString parse_pair_string(std::string_view text, const Alphabet& alphabet);
std::string format_pair_string(std::span<const PairId> s, const Alphabet& alphabet);
std::string surface_of(std::span<const PairId> s, const Alphabet& alphabet);
std::string lexical_of(std::span<const PairId> s, const Alphabet& alphabet);

/// Every accepted pair string whose lexical projection is `lexical`, with at
/// most one insertion pair in any gap. Sorted.
std::vector<PairString> generate_pairs(std::span<const RuleAutomaton> rules,
                                       const Alphabet& alphabet,
                                       std::span<const SymbolId> lexical);

std::set<std::string> generate_surface(std::span<const RuleAutomaton> rules,
                                       const Alphabet& alphabet,
                                       std::span<const SymbolId> lexical);

struct Conflict {
  std::string first;
  std::string second;
  std::size_t first_context = 0;
  std::size_t second_context = 0;
  std::string left;   ///< shortest shared left context
  std::string right;  ///< shortest shared right context

  std::string witness() const;
};

/// Pairs of coercing rules that demand different surfaces for the same
/// lexical symbol in overlapping contexts.
std::vector<Conflict> detect_conflicts(std::span<const RuleAutomaton> rules,
                                       const Alphabet& alphabet);

/// Positions (0-based, in `s` without boundaries) where `rule` is violated,
/// found by direct matching of its contexts. Independent of the automaton.
std::vector<std::size_t> violations(const TwoLevelRule& rule, const Alphabet& alphabet,
                                    std::span<const PairId> s);

struct Rejection {
  std::string surface;
  std::string rule;
  std::size_t position = 0;  ///< 1-based pair index of the violation
  std::size_t detected_at = 0;
  PairString pairs;
};

struct Trace {
  std::vector<PairString> accepted;
  /// One per rejected surface, sorted. Each is explained by its alignment
  /// with the fewest changed letters, then the one rejected latest.
  std::vector<Rejection> rejected;
  bool truncated = false;
};

/// Enumerates candidate realizations of `lexical` (restricted to `surface`
/// when given) and explains each rejection by the first rule to fail.
Trace trace(std::span<const RuleAutomaton> rules, const Alphabet& alphabet,
            std::span<const SymbolId> lexical, const std::optional<std::string>& surface,
            std::size_t limit = 200000);

/// Alphabet plus compiled rules.
struct Grammar {
  Alphabet alphabet;
  std::vector<RuleAutomaton> rules;

  static Grammar compile(std::string_view alphabet_text, std::string_view rule_text,
                         const std::string& alphabet_source = "",
                         const std::string& rule_source = "");

  std::set<std::string> realize(std::string_view lexical) const {
    return generate_surface(rules, alphabet, alphabet.tokenize(lexical));
  }
};

}  // namespace twolevel
