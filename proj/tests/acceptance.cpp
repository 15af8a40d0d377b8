// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 when
// every criterion passes.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "twolevel/analyzer.hpp"
#include "twolevel/czech.hpp"
#include "twolevel/lexicon.hpp"
#include "twolevel/text.hpp"

using namespace twolevel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const char* name, bool ok, const std::string& detail) {
  std::printf("%s  %-28s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
  if (!ok) ++failures;
}

void golden() {
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"doktorka^1P1in^2P0ých", "doktorčiných"},
      {"korek^2P0^E1em", "korkem"},
      {"matka^2P1ě", "matce"},
      {"Bůh^1P0e", "Bože"},
      {"Bůh^2P0i", "Bozi"},
      {"moucha^2P1ě", "mouše"},
      {"vosa^2P1ě", "vose"},
      {"teta^2P1ě", "tetě"},
      {"chlap^E1ec^1P0i", "chlapci"},
      {"chod^E2ba^N1", "chodeb"},
      {"š^E2la^N1", "šel"},
      {"š^E2la^N1a", "šla"},
      {"úředník^IK^1P1ice", "úřednice"},
      {"úředník^IK^1P1ic", "úřednic"},
      {"kamarádský^2P3í", "kamarádští"},
      {"hořký^1P2ejší", "hořčejší"},
      {"žluťoučký^1P2ejší", "žluťoučtější"},
  };
  auto t0 = Clock::now();
  czech::grammar();
  std::size_t ok = 0;
  std::string bad;
  for (const auto& [lex, surf] : cases) {
    if (czech::realize(lex) == std::set<std::string>{text::normalize(surf)}) {
      ++ok;
    } else {
      bad += std::string(" ") + lex;
    }
  }
  double s = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu/%zu unique and exact, %.3f s", ok, cases.size(), s);
  report("golden transductions", ok == cases.size() && s < 1.0, buf + bad);
}

void alternations() {
  const auto& table = czech::alternation_table();
  std::size_t ok = 0;
  for (const auto& e : table) ok += czech::realize(e.lexical) == std::set<std::string>{e.surface};
  report("alternation table", table.size() >= 24 && ok == table.size(),
         std::to_string(ok) + "/" + std::to_string(table.size()) + " entries realized");
}

void oracle_equivalence() {
  auto t0 = Clock::now();
  std::mt19937 rng(1000003);
  std::size_t instances = 0;
  std::size_t mismatches = 0;
  while (instances < 1000) {
    auto inst = oracle::random_instance(rng);
    auto a = Alphabet::parse(inst.alphabet);
    auto rules = parse_rules(inst.rules, a);
    std::vector<RuleAutomaton> compiled;
    for (const auto& r : rules) compiled.push_back(compile_rule(r, a));
    for (const auto& in : inst.inputs) {
      auto lex = a.tokenize(in);
      mismatches += generate_surface(compiled, a, lex) != oracle::surfaces(rules, a, lex);
    }
    ++instances;
  }
  double s = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu instances, %zu mismatches, %.1f s", instances, mismatches, s);
  report("oracle equivalence", mismatches == 0 && s < 60.0, buf);
}

const Lexicon& lexicon() {
  static const Lexicon lex = parse_lexicon(czech::builtin_lexicon(), czech::grammar().alphabet);
  return lex;
}

void round_trip(const FormIndex& index) {
  const auto& g = czech::grammar();
  std::size_t total = 0;
  std::size_t ok = 0;
  for (const auto& e : lexicon().entries) {
    for (const auto& f : expand(e, lexicon())) {
      for (const auto& s : generate_form(lexicon(), g, e.lemma, f.tag)) {
        ++total;
        for (const auto& a : analyze(index, s)) {
          if (a.lemma == e.lemma && a.tag == f.tag) {
            ++ok;
            break;
          }
        }
      }
    }
  }
  report("round trip", total > 0 && ok == total,
         std::to_string(ok) + "/" + std::to_string(total) + " forms recovered over " +
             std::to_string(lexicon().entries.size()) + " entries, " +
             std::to_string(lexicon().paradigms.size()) + " paradigms");
}

void conflicts() {
  const auto& g = czech::grammar();
  auto bundled = detect_conflicts(g.rules, g.alphabet);
  auto a = Alphabet::parse("Alphabet\n a:x a:y\n");
  std::vector<RuleAutomaton> pair;
  for (const auto& r : parse_rules("\"x\"\na:x <=> _ q: ;\n\"y\"\na:y <=> _ q: ;\n", a)) {
    pair.push_back(compile_rule(r, a));
  }
  auto control = detect_conflicts(pair, a);
  report("conflict freedom", bundled.empty() && control.size() == 1,
         std::to_string(bundled.size()) + " bundled conflicts, control flagged " +
             std::to_string(control.size()));
}

void census() {
  const auto& g = czech::grammar();
  std::vector<TwoLevelRule> rules;
  for (const auto& r : g.rules) rules.push_back(r.rule);
  auto c = czech::census(rules);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu rules (deletion %zu, epenthesis %zu, alternation %zu, spelling %zu, technical %zu)"
                " vs reference %zu (alternation %zu, spelling %zu, technical %zu)",
                c.total, c.deletion, c.epenthesis, c.alternation, c.spelling, c.technical,
                czech::kReferenceTotal, czech::kReferenceAlternation, czech::kReferenceSpelling,
                czech::kReferenceTechnical);
  report("rule census", c.unclassified.empty() && c.total > 0, buf);
}

void synthetic_coverage(const FormIndex& index) {
  auto t0 = Clock::now();
  std::vector<std::string> forms;
  for (const auto& [form, _] : index.forms()) forms.push_back(form);
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::size_t> pick(0, forms.size() - 1);
  std::uniform_int_distribution<int> len(4, 9);
  std::uniform_int_distribution<int> letter(0, 25);
  std::bernoulli_distribution known(0.9);
  const std::size_t n = 100000;
  std::string corpus;
  for (std::size_t i = 0; i < n; ++i) {
    if (known(rng)) {
      corpus += forms[pick(rng)];
    } else {
      std::string w;
      do {
        w.clear();
        for (int k = len(rng); k > 0; --k) w += static_cast<char>('a' + letter(rng));
      } while (index.contains(w));
      corpus += w;
    }
    corpus += i % 12 == 11 ? ".\n" : " ";
  }
  auto r = coverage(index, corpus);
  double s = seconds_since(t0);
  double ratio = r.ratio().value_or(0.0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu tokens, ratio %.4f (types %.4f), %.2f s", r.tokens, ratio,
                r.type_ratio().value_or(0.0), s);
  report("synthetic coverage", r.tokens == n && ratio >= 0.895 && ratio <= 0.905 && s < 10.0, buf);
}

}  // namespace

int main() {
  golden();
  alternations();
  oracle_equivalence();
  auto index = build_index(lexicon(), czech::grammar());
  round_trip(index);
  conflicts();
  census();
  synthetic_coverage(index);
  return failures == 0 ? 0 : 1;
}
