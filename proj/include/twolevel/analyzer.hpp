#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twolevel/lexicon.hpp"
#include "twolevel/rules.hpp"

namespace twolevel {

struct Analysis {
  std::string lemma;
  std::string paradigm;
  std::string tag;
  bool via_exception = false;

  auto operator<=>(const Analysis&) const = default;
};

/// Content hashes of the inputs an index was built from.
struct IndexStamp {
  std::uint64_t alphabet = 0;
  std::uint64_t rules = 0;
  std::uint64_t lexicon = 0;

  auto operator<=>(const IndexStamp&) const = default;
};

/// 64-bit FNV-1a.
std::uint64_t content_hash(std::string_view data);

/// Surface form -> analyses. Immutable once built.
class FormIndex {
 public:
  static constexpr int kFormatVersion = 1;

  IndexStamp stamp;

  void add(const std::string& surface, Analysis a);
  /// Analyses of a normalized surface form, sorted; empty when unknown.
  const std::vector<Analysis>& lookup(std::string_view surface) const;
  bool contains(std::string_view surface) const { return forms_.count(surface) > 0; }

  std::size_t form_count() const { return forms_.size(); }
  std::size_t analysis_count() const;
  const std::map<std::string, std::vector<Analysis>, std::less<>>& forms() const { return forms_; }

  bool operator==(const FormIndex&) const = default;

 private:
  std::map<std::string, std::vector<Analysis>, std::less<>> forms_;
};

/// Expands and realizes every entry. Throws ContentError naming the entry and
/// tag when a form has no realization.
FormIndex build_index(const Lexicon& lexicon, const Grammar& grammar, IndexStamp stamp = {});

/// Surface forms of (lemma, tag), over every entry with that lemma. Throws
/// ContentError for an unknown lemma or a tag none of its paradigms has.
std::set<std::string> generate_form(const Lexicon& lexicon, const Grammar& grammar,
                                    std::string_view lemma, std::string_view tag);

/// Analyses of `surface` (normalized first), ordered by lemma, paradigm, tag.
std::vector<Analysis> analyze(const FormIndex& index, std::string_view surface);

struct CoverageReport {
  std::size_t tokens = 0;
  std::size_t analyzed = 0;
  std::size_t types = 0;
  std::size_t analyzed_types = 0;
  /// Unknown word types by descending frequency, ties alphabetical.
  std::vector<std::pair<std::string, std::size_t>> top_unknown;

  /// Token ratio; nullopt for an empty corpus.
  std::optional<double> ratio() const;
  std::optional<double> type_ratio() const;
};

CoverageReport coverage(const FormIndex& index, std::string_view corpus, std::size_t top = 20);

/// Line-based index file: header, stamp, then `surface TAB lemma TAB paradigm
/// TAB tag TAB exception-flag` lines sorted by surface.
void write_index(const FormIndex& index, std::ostream& out);
/// Throws SyntaxError on a malformed file or an unsupported version.
FormIndex read_index(std::istream& in, const std::string& source = "");

}  // namespace twolevel
