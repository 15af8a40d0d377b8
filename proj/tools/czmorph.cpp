// czmorph: command-line front end for the Czech two-level toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "twolevel/analyzer.hpp"
#include "twolevel/czech.hpp"
#include "twolevel/error.hpp"
#include "twolevel/lexicon.hpp"
#include "twolevel/text.hpp"

using namespace twolevel;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kIo = 2, kContent = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string alphabet;
  std::string rules;
  std::string lexicon;
  std::string index;
  bool json = false;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Inputs with their texts, falling back to the bundled assets.
struct Inputs {
  std::string alphabet_text, rules_text, lexicon_text;
  std::string alphabet_name, rules_name, lexicon_name;

  explicit Inputs(const Options& o) {
    auto load = [](const std::string& path, std::string_view builtin, std::string& text,
                   std::string& name, const char* bundled) {
      if (path.empty()) {
        text = builtin;
        name = bundled;
      } else {
        text = read_file(path);
        name = path;
      }
    };
    auto b = czech::builtin_rules();
    load(o.alphabet, b.alphabet, alphabet_text, alphabet_name, "czech.alphabet");
    load(o.rules, b.rules, rules_text, rules_name, "czech.rules");
    load(o.lexicon, czech::builtin_lexicon(), lexicon_text, lexicon_name, "czech.lexicon");
  }

  IndexStamp stamp() const {
    return {content_hash(alphabet_text), content_hash(rules_text), content_hash(lexicon_text)};
  }
};

class Session {
 public:
  explicit Session(const Options& o) : opts_(o), in_(o) {}

  const Grammar& grammar() {
    if (!grammar_) {
      grammar_ = Grammar::compile(in_.alphabet_text, in_.rules_text, in_.alphabet_name,
                                  in_.rules_name);
    }
    return *grammar_;
  }

  const Lexicon& lexicon() {
    if (!lexicon_) lexicon_ = parse_lexicon(in_.lexicon_text, grammar().alphabet, in_.lexicon_name);
    return *lexicon_;
  }

  /// The index from --index when given (must match the inputs), else built in memory.
  const FormIndex& index() {
    if (index_) return *index_;
    if (!opts_.index.empty()) {
      std::ifstream f(opts_.index);
      if (!f) throw IoError("cannot read " + opts_.index);
      index_ = read_index(f, opts_.index);
      if (index_->stamp != in_.stamp()) {
        throw ContentError(opts_.index + ": index is stale (built from different inputs); rerun compile");
      }
    } else {
      index_ = build_index(lexicon(), grammar(), in_.stamp());
    }
    return *index_;
  }

  const Inputs& inputs() const { return in_; }

 private:
  Options opts_;
  Inputs in_;
  std::optional<Grammar> grammar_;
  std::optional<Lexicon> lexicon_;
  std::optional<FormIndex> index_;
};

json analysis_json(const Analysis& a) {
  return {{"lemma", a.lemma}, {"paradigm", a.paradigm}, {"tag", a.tag}, {"exception", a.via_exception}};
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_compile(Session& s, const Options& o, const std::string& output) {
  const auto& g = s.grammar();
  auto report = validate_lexicon(s.lexicon(), g);
  auto conflicts = detect_conflicts(g.rules, g.alphabet);
  std::string path = output.empty() ? (o.index.empty() ? "czmorph.index" : o.index) : output;
  FormIndex index = build_index(s.lexicon(), g, s.inputs().stamp());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  write_index(index, out);
  out.close();
  if (!out) throw IoError("cannot write " + path);

  std::vector<std::string> warnings;
  for (const auto& r : g.rules) {
    for (const auto& w : r.warnings) warnings.push_back(r.rule.name + ": " + w);
  }
  if (o.json) {
    json anomalies = json::array();
    for (const auto& a : report.anomalies) {
      anomalies.push_back({{"lemma", a.lemma}, {"paradigm", a.paradigm}, {"tag", a.tag},
                           {"lexical", a.lexical}, {"realizations", a.realizations}});
    }
    print_json({{"index", path},
                {"rules", g.rules.size()},
                {"entries", report.entries},
                {"forms", report.forms},
                {"exceptions", report.exceptions},
                {"surface_forms", index.form_count()},
                {"analyses", index.analysis_count()},
                {"conflicts", conflicts.size()},
                {"warnings", warnings},
                {"anomalies", anomalies}});
  } else {
    for (const auto& w : warnings) std::cout << "warning: " << w << '\n';
    for (const auto& a : report.anomalies) {
      std::cout << "anomaly: " << a.lemma << " " << a.tag << " " << a.lexical << " ->";
      for (const auto& r : a.realizations) std::cout << ' ' << r;
      if (a.realizations.empty()) std::cout << " (none)";
      std::cout << '\n';
    }
    std::cout << g.rules.size() << " rules, " << conflicts.size() << " conflicts\n"
              << report.entries << " entries, " << report.forms << " forms (" << report.exceptions
              << " exceptions)\n"
              << index.form_count() << " surface forms, " << index.analysis_count()
              << " analyses written to " << path << '\n';
  }
  return report.anomalies.empty() && conflicts.empty() ? kOk : kContent;
}

int cmd_generate(Session& s, const Options& o, const std::string& lemma, const std::string& tag) {
  auto forms = generate_form(s.lexicon(), s.grammar(), lemma, tag);
  if (o.json) {
    print_json({{"lemma", text::normalize(lemma)}, {"tag", tag}, {"forms", forms}});
  } else {
    for (const auto& f : forms) std::cout << f << '\n';
  }
  return kOk;
}

int cmd_analyze(Session& s, const Options& o, const std::vector<std::string>& args) {
  std::vector<std::string> forms;
  if (args.empty()) {
    std::string line;
    while (std::getline(std::cin, line)) {
      for (auto& w : text::words(line)) forms.push_back(std::move(w));
    }
  } else {
    for (const auto& a : args) forms.push_back(text::normalize(a));
  }
  json out = json::array();
  for (const auto& f : forms) {
    auto list = analyze(s.index(), f);
    if (o.json) {
      json items = json::array();
      for (const auto& a : list) items.push_back(analysis_json(a));
      out.push_back({{"form", f}, {"analyses", items}});
      continue;
    }
    if (list.empty()) std::cout << f << "\t?\n";
    for (const auto& a : list) {
      std::cout << f << '\t' << a.lemma << '\t' << a.tag << '\t' << a.paradigm
                << (a.via_exception ? "\texception" : "") << '\n';
    }
  }
  if (o.json) print_json(out);
  return kOk;
}

int cmd_expand(Session& s, const Options& o, const std::string& lemma) {
  const auto& lex = s.lexicon();
  const auto& g = s.grammar();
  auto entries = lex.find(lemma);
  if (entries.empty()) throw ContentError("unknown lemma '" + lemma + "'");
  json out = json::array();
  for (const LexiconEntry* e : entries) {
    for (const auto& f : expand(*e, lex)) {
      std::set<std::string> surfaces;
      std::string lexical;
      if (f.exception()) {
        surfaces.insert(*f.literal);
      } else {
        lexical = g.alphabet.spell(f.lexical);
        surfaces = generate_surface(g.rules, g.alphabet, f.lexical);
      }
      if (o.json) {
        out.push_back({{"lemma", e->lemma},
                       {"paradigm", e->paradigm},
                       {"tag", f.tag},
                       {"lexical", f.exception() ? json(nullptr) : json(lexical)},
                       {"surface", surfaces},
                       {"exception", f.exception()}});
        continue;
      }
      std::cout << e->paradigm << '\t' << f.tag << '\t' << (f.exception() ? "=" : lexical) << '\t';
      bool first = true;
      for (const auto& x : surfaces) {
        std::cout << (first ? "" : " ") << x;
        first = false;
      }
      std::cout << '\n';
    }
  }
  if (o.json) print_json(out);
  return kOk;
}

int cmd_trace(Session& s, const Options& o, const std::string& lexical,
              const std::optional<std::string>& surface) {
  const auto& g = s.grammar();
  std::optional<std::string> want;
  if (surface) want = text::normalize(*surface);
  Trace t = trace(g.rules, g.alphabet, g.alphabet.tokenize(lexical), want);
  if (o.json) {
    json acc = json::array();
    for (const auto& p : t.accepted) {
      acc.push_back({{"surface", surface_of(p, g.alphabet)}, {"pairs", format_pair_string(p, g.alphabet)}});
    }
    json rej = json::array();
    for (const auto& r : t.rejected) {
      rej.push_back({{"surface", r.surface},
                     {"rule", r.rule},
                     {"position", r.position},
                     {"pairs", format_pair_string(r.pairs, g.alphabet)}});
    }
    print_json({{"lexical", lexical}, {"accepted", acc}, {"rejected", rej}, {"truncated", t.truncated}});
    return kOk;
  }
  for (const auto& p : t.accepted) {
    std::cout << "accepted " << surface_of(p, g.alphabet) << "\t" << format_pair_string(p, g.alphabet)
              << '\n';
  }
  for (const auto& r : t.rejected) {
    std::cout << "rejected " << r.surface << "\t\"" << r.rule << "\" at position " << r.position
              << "\t" << format_pair_string(r.pairs, g.alphabet) << '\n';
  }
  if (t.accepted.empty() && t.rejected.empty()) std::cout << "no candidates\n";
  if (t.truncated) std::cout << "(candidate enumeration truncated)\n";
  return kOk;
}

int cmd_conflicts(Session& s, const Options& o) {
  const auto& g = s.grammar();
  auto list = detect_conflicts(g.rules, g.alphabet);
  if (o.json) {
    json out = json::array();
    for (const auto& c : list) {
      out.push_back({{"first", c.first},
                     {"second", c.second},
                     {"first_context", c.first_context + 1},
                     {"second_context", c.second_context + 1},
                     {"witness", c.witness()}});
    }
    print_json(out);
  } else {
    for (const auto& c : list) {
      std::cout << '"' << c.first << "\" (context " << c.first_context + 1 << ") vs \"" << c.second
                << "\" (context " << c.second_context + 1 << "): " << c.witness() << '\n';
    }
    if (list.empty()) std::cout << "no conflicts\n";
  }
  return list.empty() ? kOk : kContent;
}

int cmd_coverage(Session& s, const Options& o, const std::string& corpus, std::size_t top) {
  std::string text = read_file(corpus);
  auto r = coverage(s.index(), text, top);
  auto ratio = r.ratio();
  auto type_ratio = r.type_ratio();
  if (o.json) {
    json unknown = json::array();
    for (const auto& [w, n] : r.top_unknown) unknown.push_back({{"form", w}, {"count", n}});
    print_json({{"tokens", r.tokens},
                {"analyzed", r.analyzed},
                {"ratio", ratio ? json(*ratio) : json(nullptr)},
                {"ratio_defined", ratio.has_value()},
                {"types", r.types},
                {"analyzed_types", r.analyzed_types},
                {"type_ratio", type_ratio ? json(*type_ratio) : json(nullptr)},
                {"top_unknown", unknown}});
    return kOk;
  }
  std::cout << "tokens    " << r.tokens << '\n' << "analyzed  " << r.analyzed << '\n';
  std::cout << "ratio     " << (ratio ? std::to_string(*ratio) : "undefined (empty corpus)") << '\n';
  std::cout << "types     " << r.types << " (" << r.analyzed_types << " analyzed";
  if (type_ratio) std::cout << ", ratio " << std::to_string(*type_ratio);
  std::cout << ")\n";
  if (!r.top_unknown.empty()) {
    std::cout << "top unknown:\n";
    for (const auto& [w, n] : r.top_unknown) std::cout << "  " << n << '\t' << w << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Czech two-level morphology: generation, analysis and rule debugging"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--alphabet", o.alphabet, "Alphabet file (default: bundled Czech)")
      ->envname("CZMORPH_ALPHABET");
  app.add_option("--rules", o.rules, "Rule file (default: bundled Czech)")->envname("CZMORPH_RULES");
  app.add_option("--lexicon", o.lexicon, "Lexicon file (default: bundled sample)")
      ->envname("CZMORPH_LEXICON");
  app.add_option("--index", o.index, "Precompiled form index")->envname("CZMORPH_INDEX");
  app.add_flag("--json", o.json, "Machine-readable output");

  std::string output;
  auto* compile = app.add_subcommand("compile", "Check rules and lexicon, write the form index");
  compile->add_option("-o,--output", output, "Index path (default: --index or czmorph.index)");

  std::string lemma, tag;
  auto* generate = app.add_subcommand("generate", "Surface forms of LEMMA TAG");
  generate->add_option("lemma", lemma)->required();
  generate->add_option("tag", tag)->required();

  std::vector<std::string> forms;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyses of forms (arguments or stdin)");
  analyze_cmd->add_option("forms", forms);

  auto* expand_cmd = app.add_subcommand("expand", "Every tag, lexical string and surface of LEMMA");
  expand_cmd->add_option("lemma", lemma)->required();

  std::string lexical;
  std::optional<std::string> surface;
  auto* trace_cmd = app.add_subcommand("trace", "Explain which rule rejects each candidate");
  trace_cmd->add_option("lexical", lexical)->required();
  trace_cmd->add_option("surface", surface);

  auto* conflicts = app.add_subcommand("conflicts", "Report conflicting coercion rules");

  std::string corpus;
  std::size_t top = 20;
  auto* coverage_cmd = app.add_subcommand("coverage", "Share of corpus tokens the index analyzes");
  coverage_cmd->add_option("corpus", corpus, "UTF-8 text file, or - for stdin")->required();
  coverage_cmd->add_option("--top", top, "Unknown forms to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    Session s(o);
    if (*compile) return cmd_compile(s, o, output);
    if (*generate) return cmd_generate(s, o, lemma, tag);
    if (*analyze_cmd) return cmd_analyze(s, o, forms);
    if (*expand_cmd) return cmd_expand(s, o, lemma);
    if (*trace_cmd) return cmd_trace(s, o, lexical, surface);
    if (*conflicts) return cmd_conflicts(s, o);
    if (*coverage_cmd) return cmd_coverage(s, o, corpus, top);
  } catch (const IoError& e) {
    std::cerr << "czmorph: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    std::cerr << "czmorph: " << e.what() << '\n';
    return kContent;
  }
  return kUsage;
}
