#include "twolevel/lexicon.hpp"

#include <algorithm>

#include "lines.hpp"
#include "twolevel/error.hpp"
#include "twolevel/text.hpp"

namespace twolevel {

std::string_view to_string(StemSlot s) { return kStemSlotNames[static_cast<std::size_t>(s)]; }

std::optional<StemSlot> parse_stem_slot(std::string_view s) {
  for (std::size_t i = 0; i < kStemSlotNames.size(); ++i) {
    if (kStemSlotNames[i] == s) return static_cast<StemSlot>(i);
  }
  return std::nullopt;
}

const Ending* EndingSet::find(std::string_view tag) const {
  for (const auto& e : entries) {
    if (e.tag == tag) return &e;
  }
  return nullptr;
}

const Paradigm& Lexicon::paradigm(std::string_view name) const {
  auto it = paradigms.find(name);
  if (it == paradigms.end()) throw ContentError("unknown paradigm '" + std::string(name) + "'");
  return it->second;
}

std::vector<const Ending*> Lexicon::endings(const Paradigm& p) const {
  std::vector<const Ending*> out;
  for (const auto& set_name : p.ending_sets) {
    for (const auto& e : ending_sets.at(set_name).entries) out.push_back(&e);
  }
  return out;
}

std::vector<const LexiconEntry*> Lexicon::find(std::string_view lemma) const {
  std::string key = text::normalize(lemma);
  std::vector<const LexiconEntry*> out;
  for (const auto& e : entries) {
    if (e.lemma == key) out.push_back(&e);
  }
  return out;
}

namespace {

enum class Section { None, Endings, Paradigms, Entries };

class LexiconParser {
 public:
  LexiconParser(const Alphabet& a, std::string source) : a_(a), source_(std::move(source)) {}

  Lexicon parse(std::string_view text) {
    auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
      auto toks = detail::tokens(lines[i], static_cast<int>(i + 1));
      if (toks.empty()) continue;
      if (toks[0].text == "ENDINGS") {
        if (toks.size() != 2) fail(toks[0], "expected 'ENDINGS name'");
        if (lex_.ending_sets.count(toks[1].text)) {
          content(toks[1], "duplicate ending set '" + toks[1].text + "'");
        }
        current_ = toks[1].text;
        lex_.ending_sets[current_].name = current_;
        section_ = Section::Endings;
        continue;
      }
      if (toks[0].text == "PARADIGMS" || toks[0].text == "ENTRIES") {
        if (toks.size() != 1) fail(toks[1], "unexpected text after section header");
        section_ = toks[0].text == "PARADIGMS" ? Section::Paradigms : Section::Entries;
        continue;
      }
      switch (section_) {
        case Section::None: fail(toks[0], "expected ENDINGS, PARADIGMS or ENTRIES");
        case Section::Endings: ending(toks); break;
        case Section::Paradigms: paradigm(toks); break;
        case Section::Entries: entry(toks); break;
      }
    }
    resolve();
    return std::move(lex_);
  }

 private:
  [[noreturn]] void fail(const detail::Token& t, const std::string& msg) const {
    throw SyntaxError(source_, t.line, t.column, msg);
  }
  [[noreturn]] void content(const detail::Token& t, const std::string& msg) const {
    throw ContentError((source_.empty() ? "<input>" : source_) + ":" + std::to_string(t.line) +
                       ":" + std::to_string(t.column) + ": " + msg);
  }

  std::optional<SymbolId> as_marker(const std::string& s) const {
    if (!Marker::parse(s)) return std::nullopt;
    auto id = a_.find(s);
    if (!id || !a_.is_marker(*id)) return std::nullopt;
    return id;
  }

  std::vector<SymbolId> symbols(const detail::Token& t) const {
    try {
      return a_.tokenize(t.text);
    } catch (const ContentError& e) {
      content(t, e.what());
    }
  }

  void ending(const std::vector<detail::Token>& toks) {
    if (toks.size() > 3) fail(toks[3], "expected 'tag [marker] [ending]'");
    Ending e;
    e.line = toks[0].line;
    e.tag = toks[0].text;
    if (auto at = e.tag.find('@'); at != std::string::npos) {
      e.slot = parse_stem_slot(e.tag.substr(at + 1));
      if (!e.slot) fail(toks[0], "unknown stem slot '" + e.tag.substr(at + 1) + "'");
      e.tag.resize(at);
    }
    if (e.tag.empty()) fail(toks[0], "empty tag");
    std::size_t next = 1;
    if (toks.size() > 1) {
      if (auto m = as_marker(toks[1].text)) {
        e.marker = m;
        next = 2;
      } else if (toks[1].text.starts_with('^') && Marker::parse(toks[1].text)) {
        content(toks[1], "marker '" + toks[1].text + "' is not declared in the alphabet");
      } else if (toks.size() == 3) {
        fail(toks[1], "expected a marker before the ending");
      }
    }
    if (next < toks.size()) e.ending = symbols(toks[next]);
    auto& set = lex_.ending_sets[current_];
    if (set.find(e.tag)) content(toks[0], "duplicate tag '" + e.tag + "' in ending set " + current_);
    if (!set.entries.empty() && set.entries.front().slot.has_value() != e.slot.has_value()) {
      content(toks[0], "ending set " + current_ + " mixes tags with and without stem slots");
    }
    set.entries.push_back(std::move(e));
  }

  void paradigm(const std::vector<detail::Token>& toks) {
    Paradigm p;
    p.name = toks[0].text;
    p.line = toks[0].line;
    std::size_t i = 1;
    if (i < toks.size() && toks[i].text == "six-stem") {
      p.six_stem = true;
      ++i;
    }
    if (i >= toks.size() || toks[i].text != ":") {
      fail(i < toks.size() ? toks[i] : toks[0], "expected 'name [six-stem] : set...'");
    }
    for (++i; i < toks.size(); ++i) p.ending_sets.push_back(toks[i].text);
    if (p.ending_sets.empty()) fail(toks[0], "paradigm " + p.name + " lists no ending sets");
    if (lex_.paradigms.count(p.name)) content(toks[0], "duplicate paradigm '" + p.name + "'");
    paradigm_tokens_.emplace(p.name, toks);
    lex_.paradigms.emplace(p.name, std::move(p));
  }

  void entry(const std::vector<detail::Token>& toks) {
    if (toks.size() < 3) fail(toks.back(), "expected 'lemma paradigm base...'");
    LexiconEntry e;
    e.lemma = text::normalize(toks[0].text);
    e.paradigm = toks[1].text;
    e.line = toks[0].line;
    for (std::size_t i = 2; i < toks.size(); ++i) {
      const auto& t = toks[i];
      if (auto eq = t.text.find('='); eq != std::string::npos) {
        std::string tag = t.text.substr(0, eq);
        std::string form = text::normalize(t.text.substr(eq + 1));
        if (tag.empty() || form.empty()) fail(t, "expected 'Tag=form'");
        if (!e.exceptions.emplace(tag, form).second) content(t, "duplicate exception for " + tag);
        continue;
      }
      if (!e.exceptions.empty()) fail(t, "base forms must precede exceptions");
      if (t.text == "-") {
        e.bases.emplace_back();
        continue;
      }
      auto base = symbols(t);
      if (a_.is_marker(base.front())) content(t, "base form starts with a marker");
      e.bases.emplace_back(std::move(base));
    }
    entry_tokens_.push_back(toks);
    lex_.entries.push_back(std::move(e));
  }

  void resolve() {
    for (const auto& [name, p] : lex_.paradigms) {
      const auto& toks = paradigm_tokens_.at(name);
      std::set<std::string> tags;
      for (const auto& s : p.ending_sets) {
        auto it = lex_.ending_sets.find(s);
        if (it == lex_.ending_sets.end()) {
          content(toks[0], "paradigm " + name + " references unknown ending set '" + s + "'");
        }
        for (const auto& e : it->second.entries) {
          if (e.slot.has_value() != p.six_stem) {
            content(toks[0], "paradigm " + name + ": ending " + e.tag + " in set " + s +
                                 (p.six_stem ? " has no stem slot" : " names a stem slot"));
          }
          if (!tags.insert(e.tag).second) {
            content(toks[0], "paradigm " + name + " has tag " + e.tag + " twice");
          }
        }
      }
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (std::size_t i = 0; i < lex_.entries.size(); ++i) {
      const auto& e = lex_.entries[i];
      const auto& toks = entry_tokens_[i];
      auto it = lex_.paradigms.find(e.paradigm);
      if (it == lex_.paradigms.end()) {
        content(toks[1], "entry " + e.lemma + " references unknown paradigm '" + e.paradigm + "'");
      }
      const Paradigm& p = it->second;
      std::size_t want = p.six_stem ? kStemSlotNames.size() : 1;
      if (e.bases.size() != want) {
        content(toks[0], "entry " + e.lemma + " needs " + std::to_string(want) +
                             " base form(s) for paradigm " + p.name + ", got " +
                             std::to_string(e.bases.size()));
      }
      if (!p.six_stem && !e.bases.front()) content(toks[2], "entry " + e.lemma + " has no base form");
      for (const auto& [tag, form] : e.exceptions) {
        bool known = false;
        for (const Ending* end : lex_.endings(p)) known = known || end->tag == tag;
        if (!known) {
          content(toks[0], "entry " + e.lemma + ": exception tag " + tag + " is not in paradigm " +
                               p.name);
        }
      }
      if (!seen.emplace(e.lemma, e.paradigm).second) {
        content(toks[0], "duplicate entry " + e.lemma + " / " + e.paradigm);
      }
    }
  }

  const Alphabet& a_;
  std::string source_;
  Lexicon lex_;
  Section section_ = Section::None;
  std::string current_;
  std::map<std::string, std::vector<detail::Token>> paradigm_tokens_;
  std::vector<std::vector<detail::Token>> entry_tokens_;
};

}  // namespace

Lexicon parse_lexicon(std::string_view text, const Alphabet& alphabet, const std::string& source) {
  return LexiconParser(alphabet, source).parse(text);
}

std::vector<SymbolId> build_lexical_string(std::span<const SymbolId> base,
                                           std::optional<SymbolId> marker,
                                           std::span<const SymbolId> ending) {
  std::vector<SymbolId> out(base.begin(), base.end());
  if (marker) out.push_back(*marker);
  out.insert(out.end(), ending.begin(), ending.end());
  return out;
}

std::vector<ExpandedForm> expand(const LexiconEntry& entry, const Lexicon& lexicon) {
  const Paradigm& p = lexicon.paradigm(entry.paradigm);
  std::vector<ExpandedForm> out;
  for (const Ending* e : lexicon.endings(p)) {
    if (auto it = entry.exceptions.find(e->tag); it != entry.exceptions.end()) {
      out.push_back({e->tag, {}, it->second});
      continue;
    }
    std::size_t slot = e->slot ? static_cast<std::size_t>(*e->slot) : 0;
    const auto& base = entry.bases.at(slot);
    if (!base) continue;
    out.push_back({e->tag, build_lexical_string(*base, e->marker, e->ending), std::nullopt});
  }
  return out;
}

ValidationReport validate_lexicon(const Lexicon& lexicon, const Grammar& grammar) {
  ValidationReport r;
  r.entries = lexicon.entries.size();
  for (const auto& entry : lexicon.entries) {
    for (const auto& f : expand(entry, lexicon)) {
      ++r.forms;
      if (f.exception()) {
        ++r.exceptions;
        continue;
      }
      auto out = generate_surface(grammar.rules, grammar.alphabet, f.lexical);
      if (out.size() != 1) {
        r.anomalies.push_back({entry.lemma, entry.paradigm, f.tag,
                               grammar.alphabet.spell(f.lexical), std::move(out)});
      }
    }
  }
  return r;
}

}  // namespace twolevel
