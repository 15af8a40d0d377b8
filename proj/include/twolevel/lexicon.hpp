#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twolevel/alphabet.hpp"
#include "twolevel/rules.hpp"

namespace twolevel {

/// Stems of a six-stem verb entry, in entry order.
enum class StemSlot { Infinitive, Present, Imperative, Past, Transgressive, Passive };

inline constexpr std::array<std::string_view, 6> kStemSlotNames = {
    "infinitive", "present", "imperative", "past", "transgressive", "passive"};

std::string_view to_string(StemSlot s);
std::optional<StemSlot> parse_stem_slot(std::string_view s);

struct Ending {
  std::string tag;
  std::optional<StemSlot> slot;  ///< only in six-stem ending sets
  std::optional<SymbolId> marker;
  std::vector<SymbolId> ending;
  int line = 0;
};

struct EndingSet {
  std::string name;
  std::vector<Ending> entries;

  const Ending* find(std::string_view tag) const;
};

struct Paradigm {
  std::string name;
  bool six_stem = false;
  std::vector<std::string> ending_sets;
  int line = 0;
};

struct LexiconEntry {
  std::string lemma;  ///< normalized
  std::string paradigm;
  /// One base form, or six for a six-stem paradigm; nullopt marks an unused stem.
  std::vector<std::optional<std::vector<SymbolId>>> bases;
  std::map<std::string, std::string> exceptions;  ///< tag -> normalized surface
  int line = 0;
};

struct Lexicon {
  std::map<std::string, EndingSet, std::less<>> ending_sets;
  std::map<std::string, Paradigm, std::less<>> paradigms;
  std::vector<LexiconEntry> entries;

  const Paradigm& paradigm(std::string_view name) const;
  /// Every ending of a paradigm, set by set, in file order.
  std::vector<const Ending*> endings(const Paradigm& p) const;
  /// Entries with the given lemma (normalized before comparison).
  std::vector<const LexiconEntry*> find(std::string_view lemma) const;
};

/// Parses the ENDINGS / PARADIGMS / ENTRIES format. Throws SyntaxError for
/// malformed lines and ContentError for unresolved references.
Lexicon parse_lexicon(std::string_view text, const Alphabet& alphabet,
                      const std::string& source = "");

std::vector<SymbolId> build_lexical_string(std::span<const SymbolId> base,
                                           std::optional<SymbolId> marker,
                                           std::span<const SymbolId> ending);

struct ExpandedForm {
  std::string tag;
  std::vector<SymbolId> lexical;  ///< empty for exceptions
  std::optional<std::string> literal;

  bool exception() const { return literal.has_value(); }
};

/// One form per tag of the entry's paradigm, in paradigm order. Tags whose
/// stem is unused are skipped unless an exception supplies them.
std::vector<ExpandedForm> expand(const LexiconEntry& entry, const Lexicon& lexicon);

struct Anomaly {
  std::string lemma;
  std::string paradigm;
  std::string tag;
  std::string lexical;
  std::set<std::string> realizations;
};

struct ValidationReport {
  std::size_t entries = 0;
  std::size_t forms = 0;
  std::size_t exceptions = 0;
  std::vector<Anomaly> anomalies;  ///< forms without exactly one realization
};

ValidationReport validate_lexicon(const Lexicon& lexicon, const Grammar& grammar);

}  // namespace twolevel
