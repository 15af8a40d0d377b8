#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twolevel/rules.hpp"

namespace twolevel::czech {

struct BuiltinRules {
  std::string_view alphabet;
  std::string_view rules;
};

/// Bundled alphabet and rule program texts.
BuiltinRules builtin_rules();
/// Bundled sample lexicon text.
std::string_view builtin_lexicon();

/// The bundled grammar, compiled once on first use.
const Grammar& grammar();

/// Surface forms of a lexical string under the bundled rules.
std::set<std::string> realize(std::string_view lexical);

enum class Trigger { FirstPalatalization, SecondPalatalization, Assimilation, None };

std::string_view to_string(Trigger t);

struct AlternationEntry {
  std::string lexical_cluster;
  Trigger trigger = Trigger::None;
  std::string surface_cluster;
  bool productive = true;
  std::string example;  ///< "base→form"
  std::string lexical;  ///< constructed lexical string
  std::string surface;  ///< its expected unique realization
};

const std::vector<AlternationEntry>& alternation_table();

enum class RuleClass { Deletion, Epenthesis, Alternation, Spelling, Technical };

std::string_view to_string(RuleClass c);

/// Class of a bundled rule by name; nullopt for rules not in the bundle.
std::optional<RuleClass> classify_rule(std::string_view name);

struct Census {
  std::size_t total = 0;
  std::size_t deletion = 0;
  std::size_t epenthesis = 0;
  std::size_t alternation = 0;
  std::size_t spelling = 0;
  std::size_t technical = 0;
  std::vector<std::string> unclassified;
};

/// Counts the rules of `rules` by class.
Census census(std::span<const TwoLevelRule> rules);

/// Reference breakdown of the original 35-rule program.
inline constexpr std::size_t kReferenceTotal = 35;
inline constexpr std::size_t kReferenceAlternation = 18;
inline constexpr std::size_t kReferenceSpelling = 6;
inline constexpr std::size_t kReferenceTechnical = 1;

}  // namespace twolevel::czech
