#include "twolevel/analyzer.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "lines.hpp"
#include "twolevel/error.hpp"
#include "twolevel/text.hpp"

namespace twolevel {

std::uint64_t content_hash(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void FormIndex::add(const std::string& surface, Analysis a) {
  auto& list = forms_[surface];
  auto it = std::lower_bound(list.begin(), list.end(), a);
  if (it == list.end() || *it != a) list.insert(it, std::move(a));
}

const std::vector<Analysis>& FormIndex::lookup(std::string_view surface) const {
  static const std::vector<Analysis> none;
  auto it = forms_.find(surface);
  return it == forms_.end() ? none : it->second;
}

std::size_t FormIndex::analysis_count() const {
  std::size_t n = 0;
  for (const auto& [form, list] : forms_) n += list.size();
  return n;
}

FormIndex build_index(const Lexicon& lexicon, const Grammar& grammar, IndexStamp stamp) {
  FormIndex index;
  index.stamp = stamp;
  for (const auto& entry : lexicon.entries) {
    for (const auto& f : expand(entry, lexicon)) {
      if (f.exception()) {
        index.add(*f.literal, {entry.lemma, entry.paradigm, f.tag, true});
        continue;
      }
      auto surfaces = generate_surface(grammar.rules, grammar.alphabet, f.lexical);
      if (surfaces.empty()) {
        throw ContentError("entry " + entry.lemma + " (" + entry.paradigm + "), tag " + f.tag +
                           ": '" + grammar.alphabet.spell(f.lexical) + "' has no realization");
      }
      for (const auto& s : surfaces) index.add(s, {entry.lemma, entry.paradigm, f.tag, false});
    }
  }
  return index;
}

std::set<std::string> generate_form(const Lexicon& lexicon, const Grammar& grammar,
                                    std::string_view lemma, std::string_view tag) {
  auto entries = lexicon.find(lemma);
  if (entries.empty()) throw ContentError("unknown lemma '" + std::string(lemma) + "'");
  std::set<std::string> out;
  bool tag_known = false;
  for (const LexiconEntry* entry : entries) {
    for (const Ending* e : lexicon.endings(lexicon.paradigm(entry->paradigm))) {
      tag_known = tag_known || e->tag == tag;
    }
    for (const auto& f : expand(*entry, lexicon)) {
      if (f.tag != tag) continue;
      if (f.exception()) {
        out.insert(*f.literal);
      } else {
        auto s = generate_surface(grammar.rules, grammar.alphabet, f.lexical);
        out.insert(s.begin(), s.end());
      }
    }
  }
  if (!tag_known) {
    throw ContentError("lemma '" + std::string(lemma) + "' has no tag '" + std::string(tag) + "'");
  }
  return out;
}

std::vector<Analysis> analyze(const FormIndex& index, std::string_view surface) {
  return index.lookup(text::normalize(surface));
}

std::optional<double> CoverageReport::ratio() const {
  if (tokens == 0) return std::nullopt;
  return static_cast<double>(analyzed) / static_cast<double>(tokens);
}

std::optional<double> CoverageReport::type_ratio() const {
  if (types == 0) return std::nullopt;
  return static_cast<double>(analyzed_types) / static_cast<double>(types);
}

CoverageReport coverage(const FormIndex& index, std::string_view corpus, std::size_t top) {
  CoverageReport r;
  std::unordered_map<std::string, std::size_t> unknown;
  std::unordered_map<std::string, bool> seen;
  for (auto& w : text::words(corpus)) {
    ++r.tokens;
    bool known = index.contains(w);
    if (known) {
      ++r.analyzed;
    } else {
      ++unknown[w];
    }
    seen.emplace(std::move(w), known);
  }
  r.types = seen.size();
  for (const auto& [w, known] : seen) r.analyzed_types += known ? 1 : 0;
  std::vector<std::pair<std::string, std::size_t>> list(unknown.begin(), unknown.end());
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (list.size() > top) list.resize(top);
  r.top_unknown = std::move(list);
  return r;
}

namespace {

constexpr std::string_view kMagic = "twolevel-index";

std::string hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xF];
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? line.npos : tab - start));
    if (tab == std::string_view::npos) return out;
    start = tab + 1;
  }
}

}  // namespace

void write_index(const FormIndex& index, std::ostream& out) {
  out << kMagic << ' ' << FormIndex::kFormatVersion << '\n';
  out << "alphabet " << hex(index.stamp.alphabet) << '\n';
  out << "rules " << hex(index.stamp.rules) << '\n';
  out << "lexicon " << hex(index.stamp.lexicon) << '\n';
  out << "analyses " << index.analysis_count() << '\n';
  for (const auto& [form, list] : index.forms()) {
    for (const auto& a : list) {
      out << form << '\t' << a.lemma << '\t' << a.paradigm << '\t' << a.tag << '\t'
          << (a.via_exception ? 1 : 0) << '\n';
    }
  }
}

FormIndex read_index(std::istream& in, const std::string& source) {
  FormIndex index;
  std::string line;
  int line_no = 0;
  auto next = [&](std::string_view what) {
    ++line_no;
    if (!std::getline(in, line)) throw SyntaxError(source, line_no, 0, "missing " + std::string(what));
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };
  auto field = [&](std::string_view key) -> std::string {
    next(key);
    auto toks = detail::tokens(line, line_no);
    if (toks.size() != 2 || toks[0].text != key) {
      throw SyntaxError(source, line_no, 1, "expected '" + std::string(key) + " <value>'");
    }
    return toks[1].text;
  };
  auto number = [&](const std::string& s, int base) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, base);
    if (ec != std::errc() || p != s.data() + s.size()) {
      throw SyntaxError(source, line_no, 0, "bad number '" + s + "'");
    }
    return v;
  };

  std::string version = field(kMagic);
  if (version != std::to_string(FormIndex::kFormatVersion)) {
    throw SyntaxError(source, line_no, 0, "unsupported index version " + version);
  }
  index.stamp.alphabet = number(field("alphabet"), 16);
  index.stamp.rules = number(field("rules"), 16);
  index.stamp.lexicon = number(field("lexicon"), 16);
  std::uint64_t expected = number(field("analyses"), 10);
  std::uint64_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto f = split_tabs(line);
    if (f.size() != 5 || f[0].empty() || f[1].empty() || f[3].empty() ||
        (f[4] != "0" && f[4] != "1")) {
      throw SyntaxError(source, line_no, 1, "expected 5 tab-separated fields");
    }
    index.add(std::string(f[0]), {std::string(f[1]), std::string(f[2]), std::string(f[3]), f[4] == "1"});
    ++count;
  }
  if (count != expected) {
    throw SyntaxError(source, line_no, 0,
                      "index declares " + std::to_string(expected) + " analyses, found " +
                          std::to_string(count));
  }
  return index;
}

}  // namespace twolevel
