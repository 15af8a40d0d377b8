#include "twolevel/alphabet.hpp"

#include <algorithm>
#include <array>
#include <iterator>

#include "lines.hpp"
#include "twolevel/error.hpp"
#include "twolevel/text.hpp"

namespace twolevel {
namespace {

struct BuiltinLetter {
  std::string_view text;
  Category category;
};

// f, q, w and x behave like v, k, v and s.
constexpr std::array<BuiltinLetter, 42> kLetters{{
    {"a", Category::HardVowel},   {"á", Category::HardVowel},   {"b", Category::NeutralCons},
    {"c", Category::SoftCons},    {"č", Category::SoftCons},    {"d", Category::HardCons},
    {"ď", Category::SoftCons},    {"e", Category::HardVowel},   {"é", Category::HardVowel},
    {"ě", Category::SoftVowel},   {"f", Category::NeutralCons}, {"g", Category::HardCons},
    {"h", Category::HardCons},    {"i", Category::SoftVowel},   {"í", Category::SoftVowel},
    {"j", Category::SoftCons},    {"k", Category::HardCons},    {"l", Category::NeutralCons},
    {"m", Category::NeutralCons}, {"n", Category::HardCons},    {"ň", Category::SoftCons},
    {"o", Category::HardVowel},   {"ó", Category::HardVowel},   {"p", Category::NeutralCons},
    {"q", Category::HardCons},    {"r", Category::HardCons},    {"ř", Category::SoftCons},
    {"s", Category::NeutralCons}, {"š", Category::SoftCons},    {"t", Category::HardCons},
    {"ť", Category::SoftCons},    {"u", Category::HardVowel},   {"ú", Category::HardVowel},
    {"ů", Category::HardVowel},   {"v", Category::NeutralCons}, {"w", Category::NeutralCons},
    {"x", Category::NeutralCons}, {"y", Category::HardVowel},   {"ý", Category::HardVowel},
    {"z", Category::NeutralCons}, {"ž", Category::SoftCons},    {"0", Category::Zero},
}};

constexpr std::array<std::string_view, 11> kDefaultEnd{"a", "á", "e", "é", "ě", "i",
                                                       "í", "o", "u", "y", "ý"};

bool is_set_name(std::string_view token) {
  return !token.empty() && token.front() >= 'A' && token.front() <= 'Z';
}

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::HardCons: return "hard-cons";
    case Category::SoftCons: return "soft-cons";
    case Category::NeutralCons: return "neutral-cons";
    case Category::HardVowel: return "hard-vowel";
    case Category::SoftVowel: return "soft-vowel";
    case Category::Marker: return "marker";
    case Category::Zero: return "zero";
    case Category::Other: return "other";
  }
  return "other";
}

std::string Marker::text() const {
  std::string out = "^";
  switch (kind) {
    case Kind::P1: out += "1P"; break;
    case Kind::P2: out += "2P"; break;
    case Kind::A: out += "A"; break;
    case Kind::N: out += "N"; break;
    case Kind::E1: return "^E1";
    case Kind::E2: return "^E2";
    case Kind::IK: return "^IK";
  }
  return out + std::to_string(strip);
}

std::optional<Marker> Marker::parse(std::string_view s) {
  if (s.size() < 3 || s.front() != '^') return std::nullopt;
  s.remove_prefix(1);
  if (s == "E1") return Marker{Kind::E1};
  if (s == "E2") return Marker{Kind::E2};
  if (s == "IK") return Marker{Kind::IK};
  auto counted = [&](Kind k, std::string_view rest) -> std::optional<Marker> {
    if (rest.size() != 1 || rest[0] < '0' || rest[0] > '4') return std::nullopt;
    return Marker{k, rest[0] - '0'};
  };
  if (s.starts_with("1P")) return counted(Kind::P1, s.substr(2));
  if (s.starts_with("2P")) return counted(Kind::P2, s.substr(2));
  if (s.starts_with("A")) return counted(Kind::A, s.substr(1));
  if (s.starts_with("N")) return counted(Kind::N, s.substr(1));
  return std::nullopt;
}

std::vector<std::string> split_symbols(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t caret = s.find('^', i);
    std::size_t stop = caret == std::string_view::npos ? s.size() : caret;
    if (stop > i) {
      for (auto& g : text::graphemes(s.substr(i, stop - i))) out.push_back(std::move(g));
    }
    if (caret == std::string_view::npos) break;
    // Longest marker spelling: ^IK, ^E1, ^1P0 ... (at most four characters).
    std::size_t len = 0;
    for (std::size_t n : {4u, 3u}) {
      if (caret + n <= s.size() && Marker::parse(s.substr(caret, n))) {
        len = n;
        break;
      }
    }
    if (len == 0) {
      std::size_t end = caret + 1;
      while (end < s.size() && s[end] != '^' && s[end] != ' ') ++end;
      out.emplace_back(s.substr(caret, end - caret));
      i = end;
    } else {
      out.emplace_back(s.substr(caret, len));
      i = caret + len;
    }
  }
  return out;
}

Alphabet::Alphabet() {
  // "0" must receive id 0; it is the last entry of kLetters.
  intern("0");
  for (const auto& l : kLetters) {
    if (l.category == Category::Zero) continue;
    SymbolId id = intern(std::string(l.text));
    categories_[id] = l.category;
  }
  categories_[kZero] = Category::Zero;
}

SymbolId Alphabet::intern(const std::string& symbol) {
  if (auto it = ids_.find(symbol); it != ids_.end()) return it->second;
  auto id = static_cast<SymbolId>(names_.size());
  names_.push_back(symbol);
  ids_.emplace(symbol, id);
  auto m = Marker::parse(symbol);
  markers_.push_back(m);
  categories_.push_back(m ? Category::Marker : Category::Other);
  return id;
}

std::optional<SymbolId> Alphabet::find(std::string_view symbol) const {
  if (auto it = ids_.find(symbol); it != ids_.end()) return it->second;
  if (!symbol.empty() && symbol.front() != '^') {
    if (auto it = ids_.find(text::normalize(symbol)); it != ids_.end()) return it->second;
  }
  return std::nullopt;
}

SymbolId Alphabet::id(std::string_view symbol) const {
  if (auto id = find(symbol)) return *id;
  throw ContentError("unknown symbol '" + std::string(symbol) + "'");
}

Category Alphabet::classify(SymbolId id) const {
  if (id >= categories_.size()) throw ContentError("unknown symbol id " + std::to_string(id));
  return categories_[id];
}

bool Alphabet::has_set(std::string_view name) const {
  return sets_.find(text::compose(name)) != sets_.end();
}

const std::vector<SymbolId>& Alphabet::set(std::string_view name) const {
  auto it = sets_.find(text::compose(name));
  if (it == sets_.end()) throw ContentError("unknown set '" + std::string(name) + "'");
  return it->second;
}

bool Alphabet::member(std::string_view set_name, SymbolId id) const {
  const auto& s = set(set_name);
  return std::binary_search(s.begin(), s.end(), id);
}

std::vector<std::string> Alphabet::set_names() const {
  std::vector<std::string> out;
  for (const auto& [name, members] : sets_) out.push_back(name);
  return out;
}

std::optional<PairId> Alphabet::pair_id(SymbolPair p) const {
  if (auto it = pair_ids_.find(p); it != pair_ids_.end()) return it->second;
  return std::nullopt;
}

std::string Alphabet::pair_text(SymbolPair p) const {
  if (p.identity()) return name(p.lexical);
  return name(p.lexical) + ":" + name(p.surface);
}

std::string Alphabet::pair_text(PairId id) const { return pair_text(pairs_.at(id)); }

std::vector<SymbolId> Alphabet::tokenize(std::string_view lexical) const {
  std::vector<SymbolId> out;
  for (const auto& s : split_symbols(lexical)) {
    if (s == " " || s == "\t") throw ContentError("whitespace inside lexical string");
    auto id = find(s);
    if (!id || *id == kZero) {
      throw ContentError("undeclared symbol '" + s + "' in '" + std::string(lexical) + "'");
    }
    out.push_back(*id);
  }
  return out;
}

std::string Alphabet::spell(std::span<const SymbolId> symbols) const {
  std::string out;
  for (SymbolId s : symbols) {
    if (s != kZero) out += name(s);
  }
  return out;
}

SymbolPair Alphabet::parse_pair(std::string_view t) const {
  std::size_t colon = t.find(':');
  if (colon == std::string_view::npos) {
    SymbolId s = id(t);
    return {s, is_marker(s) ? kZero : s};
  }
  return {id(t.substr(0, colon)), id(t.substr(colon + 1))};
}

void Alphabet::add_pair(SymbolPair p) {
  if (p.lexical == kZero && p.surface == kZero) throw ContentError("pair 0:0 is not allowed");
  if (std::find(pairs_.begin(), pairs_.end(), p) == pairs_.end()) pairs_.push_back(p);
}

void Alphabet::finalize() {
  std::vector<SymbolId> letters;
  std::vector<SymbolId> boundary_markers;
  for (SymbolId id = 1; id < names_.size(); ++id) {
    if (is_letter(id)) {
      letters.push_back(id);
      add_pair({id, id});
    } else if (markers_[id]->is_boundary()) {
      boundary_markers.push_back(id);
    }
  }
  std::stable_sort(pairs_.begin(), pairs_.end(), [](SymbolPair a, SymbolPair b) {
    if (a.identity() != b.identity()) return a.identity();
    return a < b;
  });
  pair_ids_.clear();
  by_lexical_.assign(names_.size(), {});
  for (PairId i = 0; i < pairs_.size(); ++i) {
    pair_ids_.emplace(pairs_[i], i);
    by_lexical_[pairs_[i].lexical].push_back(i);
  }

  auto by_category = [&](std::initializer_list<Category> cats) {
    std::vector<SymbolId> out;
    for (SymbolId id : letters) {
      if (std::find(cats.begin(), cats.end(), categories_[id]) != cats.end()) out.push_back(id);
    }
    return out;
  };
  auto builtin = [&](const std::string& name, std::vector<SymbolId> members) {
    sets_.try_emplace(name, std::move(members));
  };
  builtin("HardCons", by_category({Category::HardCons}));
  builtin("SoftCons", by_category({Category::SoftCons}));
  builtin("NeutralCons", by_category({Category::NeutralCons}));
  builtin("HardVowel", by_category({Category::HardVowel}));
  builtin("SoftVowel", by_category({Category::SoftVowel}));
  builtin("Cons", by_category({Category::HardCons, Category::SoftCons, Category::NeutralCons}));
  builtin("Vowel", by_category({Category::HardVowel, Category::SoftVowel}));
  builtin("Letter", letters);
  builtin("Marker", boundary_markers);
  {
    std::vector<SymbolId> non_ccs;
    const SymbolId c = *find("c"), cc = *find("č"), s = *find("s");
    for (SymbolId id : letters) {
      if (id != c && id != cc && id != s) non_ccs.push_back(id);
    }
    builtin(text::compose("NonCČS"), std::move(non_ccs));
  }
  {
    std::vector<SymbolId> end;
    for (auto e : kDefaultEnd) end.push_back(*find(e));
    std::sort(end.begin(), end.end());
    builtin("End", std::move(end));
  }
}

Alphabet Alphabet::parse(std::string_view text_in, const std::string& source) {
  Alphabet a;
  enum class Section { None, Alphabet, Sets } section = Section::None;
  struct PendingSet {
    std::string name;
    detail::Token name_token;
    std::vector<detail::Token> members;
    bool saw_equals = false;
  };
  std::vector<PendingSet> pending;
  bool in_set = false;

  auto resolve = [&](const detail::Token& tok, std::string_view sym, bool allow_new) -> SymbolId {
    if (sym == "0") return kZero;
    if (sym.starts_with("^")) {
      if (!Marker::parse(sym)) {
        throw SyntaxError(source, tok.line, tok.column, "malformed marker '" + std::string(sym) + "'");
      }
      return a.intern(std::string(sym));
    }
    auto g = text::graphemes(sym);
    if (g.size() != 1) {
      throw SyntaxError(source, tok.line, tok.column,
                        "'" + std::string(sym) + "' is not a single symbol");
    }
    if (auto id = a.find(g[0])) return *id;
    if (!allow_new) {
      throw ContentError(source + ":" + std::to_string(tok.line) + ":" +
                         std::to_string(tok.column) + ": pair references undeclared symbol '" +
                         std::string(sym) + "'");
    }
    return a.intern(g[0]);
  };

  auto lines = detail::split_lines(text_in);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    for (const auto& tok : detail::tokens(lines[ln], static_cast<int>(ln + 1))) {
      if (!in_set && (tok.text == "Alphabet" || tok.text == "Sets")) {
        section = tok.text == "Alphabet" ? Section::Alphabet : Section::Sets;
        continue;
      }
      if (section == Section::None) {
        throw SyntaxError(source, tok.line, tok.column, "expected section header 'Alphabet' or 'Sets'");
      }
      if (section == Section::Alphabet) {
        const std::string& t = tok.text;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos) {
          SymbolId s = resolve(tok, t, true);
          if (s == kZero) throw SyntaxError(source, tok.line, tok.column, "bare 0 is not a symbol");
          if (a.is_marker(s)) a.add_pair({s, kZero});
          continue;
        }
        if (colon == 0 || colon + 1 == t.size() || t.find(':', colon + 1) != std::string::npos) {
          throw SyntaxError(source, tok.line, tok.column, "malformed pair '" + t + "'");
        }
        std::string_view lex = std::string_view(t).substr(0, colon);
        std::string_view surf = std::string_view(t).substr(colon + 1);
        SymbolId l = resolve(tok, lex, lex.starts_with("^"));
        SymbolId s = resolve(tok, surf, false);
        if (a.is_marker(s)) {
          throw SyntaxError(source, tok.line, tok.column, "markers cannot appear on the surface side");
        }
        if (a.is_marker(l) && s != kZero) {
          throw ContentError(source + ":" + std::to_string(tok.line) +
                             ": markers are realized only as 0: '" + t + "'");
        }
        if (l == kZero && s == kZero) throw SyntaxError(source, tok.line, tok.column, "pair 0:0");
        a.add_pair({l, s});
        continue;
      }
      // Sets section: Name = members ; (resolved after the symbol universe is final)
      if (!in_set) {
        if (!is_set_name(tok.text)) {
          throw SyntaxError(source, tok.line, tok.column,
                            "set name must start with an uppercase letter: '" + tok.text + "'");
        }
        pending.push_back({text::compose(tok.text), tok, {}, false});
        in_set = true;
        continue;
      }
      PendingSet& ps = pending.back();
      std::string_view t = tok.text;
      if (!ps.saw_equals) {
        if (t != "=") throw SyntaxError(source, tok.line, tok.column, "expected '=' after set name");
        ps.saw_equals = true;
        continue;
      }
      bool closes = t.ends_with(";");
      if (closes) t.remove_suffix(1);
      if (!t.empty()) ps.members.push_back({std::string(t), tok.line, tok.column});
      if (closes) in_set = false;
    }
  }
  if (in_set) {
    const auto& ps = pending.back();
    throw SyntaxError(source, ps.name_token.line, ps.name_token.column,
                      "set '" + ps.name + "' is missing its closing ';'");
  }
  a.finalize();
  std::map<std::string, int, std::less<>> seen;
  for (auto& ps : pending) {
    if (!seen.emplace(ps.name, ps.name_token.line).second) {
      throw ContentError(source + ":" + std::to_string(ps.name_token.line) +
                         ": duplicate set name '" + ps.name + "'");
    }
    // Members after a lone '-' are removed from the set.
    std::vector<SymbolId> members;
    std::vector<SymbolId> removed;
    bool subtract = false;
    for (const auto& m : ps.members) {
      if (m.text == "-") {
        subtract = true;
        continue;
      }
      auto& target = subtract ? removed : members;
      std::string key = text::compose(m.text);
      if (auto it = a.sets_.find(key); is_set_name(m.text) && m.text.size() > 1) {
        if (it == a.sets_.end()) {
          throw ContentError(source + ":" + std::to_string(m.line) + ": unknown set '" + m.text + "'");
        }
        target.insert(target.end(), it->second.begin(), it->second.end());
        continue;
      }
      auto id = a.find(m.text);
      if (!id || *id == kZero) {
        throw ContentError(source + ":" + std::to_string(m.line) + ":" + std::to_string(m.column) +
                           ": set member '" + m.text + "' is not a declared symbol");
      }
      target.push_back(*id);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::sort(removed.begin(), removed.end());
    std::vector<SymbolId> kept;
    std::set_difference(members.begin(), members.end(), removed.begin(), removed.end(),
                        std::back_inserter(kept));
    members = std::move(kept);
    a.sets_[ps.name] = std::move(members);
  }
  return a;
}

}  // namespace twolevel
