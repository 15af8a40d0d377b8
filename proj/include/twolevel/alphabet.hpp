#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twolevel {

using SymbolId = std::uint16_t;
using PairId = std::uint32_t;

/// The zero symbol "0": empty on whichever side it appears.
inline constexpr SymbolId kZero = 0;

enum class Category {
  HardCons,
  SoftCons,
  NeutralCons,
  HardVowel,
  SoftVowel,
  Marker,
  Zero,
  Other,
};

std::string_view to_string(Category c);

/// Morpheme-boundary and auxiliary markers (`^1P1`, `^2P0`, `^A2`, `^N4`,
/// `^E1`, `^E2`, `^IK`).
struct Marker {
  enum class Kind { P1, P2, A, N, E1, E2, IK };

  Kind kind;
  int strip = -1;  ///< characters of the base form replaced; -1 for E1/E2/IK

  /// True for the boundary kinds that carry a strip count.
  bool is_boundary() const { return strip >= 0; }
  std::string text() const;

  /// Parses `^...` marker spelling; returns nullopt when `s` is not a marker.
  static std::optional<Marker> parse(std::string_view s);

  auto operator<=>(const Marker&) const = default;
};

struct SymbolPair {
  SymbolId lexical = kZero;
  SymbolId surface = kZero;

  bool identity() const { return lexical == surface; }
  auto operator<=>(const SymbolPair&) const = default;
};

/// Symbol universe, feasible lexical:surface pairs and named symbol sets.
///
/// Built-in Czech letters always exist with their identity pairs; a
/// declaration adds markers, non-identity pairs and sets. Immutable once
/// parsed.
class Alphabet {
 public:
  /// Parses an alphabet declaration (`Alphabet` and `Sets` sections).
  static Alphabet parse(std::string_view text, const std::string& source = "");

  std::size_t symbol_count() const { return names_.size(); }
  const std::string& name(SymbolId id) const { return names_.at(id); }
  std::optional<SymbolId> find(std::string_view symbol) const;
  /// Like find() but throws ContentError for unknown symbols.
  SymbolId id(std::string_view symbol) const;

  bool is_marker(SymbolId id) const { return markers_.at(id).has_value(); }
  const std::optional<Marker>& marker(SymbolId id) const { return markers_.at(id); }
  bool is_letter(SymbolId id) const { return id != kZero && !is_marker(id); }

  Category classify(SymbolId id) const;
  Category classify(std::string_view symbol) const { return classify(id(symbol)); }

  bool has_set(std::string_view name) const;
  /// Members of a named set, sorted by id. Throws ContentError if unknown.
  const std::vector<SymbolId>& set(std::string_view name) const;
  bool member(std::string_view set_name, SymbolId id) const;
  bool member(std::string_view set_name, std::string_view symbol) const {
    return member(set_name, id(symbol));
  }
  std::vector<std::string> set_names() const;

  /// Feasible pairs: letter identities first, then the rest by (lexical, surface).
  const std::vector<SymbolPair>& pairs() const { return pairs_; }
  std::optional<PairId> pair_id(SymbolPair p) const;
  bool feasible(SymbolPair p) const { return pair_id(p).has_value(); }
  /// Pairs whose lexical side is `lexical`.
  const std::vector<PairId>& realizations(SymbolId lexical) const {
    return by_lexical_.at(lexical);
  }
  /// Pairs with a zero lexical side (surface insertions).
  const std::vector<PairId>& insertions() const { return by_lexical_.at(kZero); }

  /// `a:b` notation; identity pairs print as the bare symbol.
  std::string pair_text(PairId id) const;
  std::string pair_text(SymbolPair p) const;

  /// Splits a lexical string such as `korek^2P0^E1em` into symbols.
  std::vector<SymbolId> tokenize(std::string_view lexical) const;
  /// Concatenates symbol names, skipping zeros.
  std::string spell(std::span<const SymbolId> symbols) const;

  /// Parses `a:b` (or a bare symbol as its identity pair).
  SymbolPair parse_pair(std::string_view text) const;

 private:
  Alphabet();
  SymbolId intern(const std::string& symbol);
  void add_pair(SymbolPair p);
  void finalize();

  std::vector<std::string> names_;
  std::map<std::string, SymbolId, std::less<>> ids_;
  std::vector<std::optional<Marker>> markers_;
  std::vector<Category> categories_;
  std::map<std::string, std::vector<SymbolId>, std::less<>> sets_;
  std::vector<SymbolPair> pairs_;
  std::map<SymbolPair, PairId> pair_ids_;
  std::vector<std::vector<PairId>> by_lexical_;
};

/// Splits `s` into symbol tokens: `^`-markers are kept verbatim, everything
/// else is normalized and split into graphemes.
std::vector<std::string> split_symbols(std::string_view s);

}  // namespace twolevel
