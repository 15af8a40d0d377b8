#include "twolevel/czech.hpp"

#include <map>

namespace twolevel::assets {
extern const std::string_view kAlphabet;
extern const std::string_view kRules;
extern const std::string_view kLexicon;
}  // namespace twolevel::assets

namespace twolevel::czech {

BuiltinRules builtin_rules() { return {assets::kAlphabet, assets::kRules}; }

std::string_view builtin_lexicon() { return assets::kLexicon; }

const Grammar& grammar() {
  static const Grammar g =
      Grammar::compile(assets::kAlphabet, assets::kRules, "czech.alphabet", "czech.rules");
  return g;
}

std::set<std::string> realize(std::string_view lexical) { return grammar().realize(lexical); }

std::string_view to_string(Trigger t) {
  switch (t) {
    case Trigger::FirstPalatalization: return "first-palatalization";
    case Trigger::SecondPalatalization: return "second-palatalization";
    case Trigger::Assimilation: return "assimilation";
    case Trigger::None: return "none";
  }
  return "none";
}

std::string_view to_string(RuleClass c) {
  switch (c) {
    case RuleClass::Deletion: return "deletion";
    case RuleClass::Epenthesis: return "epenthesis";
    case RuleClass::Alternation: return "alternation";
    case RuleClass::Spelling: return "spelling";
    case RuleClass::Technical: return "technical";
  }
  return "deletion";
}

const std::vector<AlternationEntry>& alternation_table() {
  using T = Trigger;
  static const std::vector<AlternationEntry> table = {
      {"ki", T::FirstPalatalization, "či", true, "matka→matčin", "matka^1P1in", "matčin"},
      {"kě", T::SecondPalatalization, "ce", true, "matka→matce", "matka^2P1ě", "matce"},
      {"ki", T::SecondPalatalization, "ci", true, "kluk→kluci", "kluk^2P0i", "kluci"},
      {"he", T::FirstPalatalization, "že", true, "bůh→bože", "bůh^1P0e", "bože"},
      {"hi", T::SecondPalatalization, "zi", true, "bůh→bozi", "bůh^2P0i", "bozi"},
      {"gi", T::FirstPalatalization, "ži", true, "jaga→jažin", "jaga^1P1in", "jažin"},
      {"gě", T::SecondPalatalization, "ze", true, "jaga→jaze", "jaga^2P1ě", "jaze"},
      {"chě", T::SecondPalatalization, "še", true, "moucha→mouše", "moucha^2P1ě", "mouše"},
      {"chi", T::SecondPalatalization, "ši", true, "čech→češi", "čech^2P0i", "češi"},
      {"dě", T::SecondPalatalization, "dě", true, "rada→radě", "rada^2P1ě", "radě"},
      {"tě", T::SecondPalatalization, "tě", true, "teta→tetě", "teta^2P1ě", "tetě"},
      {"ně", T::SecondPalatalization, "ně", true, "krásný→krásně", "krásný^2P1ě", "krásně"},
      {"nje", T::Assimilation, "ně", true, "honit→honění", "honit^A2ení", "honění"},
      {"rě", T::SecondPalatalization, "ře", true, "sestra→sestře", "sestra^2P1ě", "sestře"},
      {"rje", T::Assimilation, "ře", true, "var→vaření", "var^A0ení", "vaření"},
      {"kje", T::Assimilation, "če", true, "tlak→tlačen", "tlak^A0en", "tlačen"},
      {"hje", T::Assimilation, "že", true, "mnoho→množení", "mnoho^A1ení", "množení"},
      {"gje", T::Assimilation, "že", true, "pedagog→pedagožení", "pedagog^A0ení", "pedagožení"},
      {"dj", T::Assimilation, "z", false, "sladit→slazení", "sladit^A2ení", "slazení"},
      {"dě", T::SecondPalatalization, "dě", true, "sladit→sladění", "sladit^2P2ění", "sladění"},
      {"tje", T::Assimilation, "ce", false, "platit→placení", "platit^A2ení", "placení"},
      {"bje", T::Assimilation, "be", true, "zlobit→zlobení", "zlobit^A2ení", "zlobení"},
      {"mje", T::Assimilation, "me", true, "zlomit→zlomený", "zlomit^A2ený", "zlomený"},
      {"pje", T::Assimilation, "pe", true, "kropit→kropení", "kropit^A2ení", "kropení"},
      {"vje", T::Assimilation, "ve", true, "lovit→lovení", "lovit^A2ení", "lovení"},
      {"sje", T::Assimilation, "še", false, "prosit→prošení", "prosit^A2ení", "prošení"},
      {"sě", T::SecondPalatalization, "se", true, "kosit→kosení", "kosit^2P2ění", "kosení"},
      {"zje", T::Assimilation, "že", false, "kazit→kažení", "kazit^A2ení", "kažení"},
      {"sě", T::SecondPalatalization, "se", true, "vosa→vose", "vosa^2P1ě", "vose"},
      {"zě", T::SecondPalatalization, "ze", true, "koza→koze", "koza^2P1ě", "koze"},
      {"lje", T::Assimilation, "le", true, "školit→školení", "školit^A2ení", "školení"},
      {"lě", T::SecondPalatalization, "le", true, "škola→škole", "škola^2P1ě", "škole"},
      {"stj", T::Assimilation, "šť", false, "čistit→čištění", "čistit^A2ení", "čištění"},
      {"slj", T::Assimilation, "šl", false, "myslit→myšlení", "myslit^A2ení", "myšlení"},
      {"sk", T::SecondPalatalization, "šť", true, "kamarádský→kamarádští", "kamarádský^2P3í",
       "kamarádští"},
      {"sk", T::FirstPalatalization, "šť", true, "lidský→lidštější", "lidský^1P2ejší",
       "lidštější"},
      {"ck", T::SecondPalatalization, "čť", true, "čacký→čačtí", "čacký^2P3í", "čačtí"},
      {"čk", T::FirstPalatalization, "čť", true, "žluťoučký→žluťoučtější",
       "žluťoučký^1P2ejší", "žluťoučtější"},
      {"čk", T::SecondPalatalization, "cc", true, "žluťoučký→žluťouccí", "žluťoučký^2P3í",
       "žluťouccí"},
      {"kě", T::FirstPalatalization, "če", true, "hořký→hořčejší", "hořký^1P2ejší", "hořčejší"},
      {"bě", T::None, "bě", true, "vrba→vrbě", "vrba^2P1ě", "vrbě"},
      {"cě", T::FirstPalatalization, "če", true, "chlapec→chlapče", "chlap^E1ec^1P0e",
       "chlapče"},
  };
  return table;
}

std::optional<RuleClass> classify_rule(std::string_view name) {
  using C = RuleClass;
  static const std::map<std::string, C, std::less<>> classes = {
      {"Deletion of the ending -a-", C::Deletion},
      {"Deletion of e", C::Deletion},
      {"Deletion of o", C::Deletion},
      {"Deletion of v", C::Deletion},
      {"Deletion of t", C::Deletion},
      {"Deletion of i", C::Deletion},
      {"Deletion of ý", C::Deletion},
      {"Deletion of k before -ík-", C::Deletion},
      {"Deletion of í in -ík-", C::Deletion},
      {"Epenthetic e", C::Epenthesis},
      {"First palatalization k -> č", C::Alternation},
      {"Second palatalization k -> c", C::Alternation},
      {"Cluster palatalization k -> ť", C::Alternation},
      {"First palatalization h -> ž", C::Alternation},
      {"Second palatalization h -> z", C::Alternation},
      {"First palatalization g -> ž", C::Alternation},
      {"Second palatalization g -> z", C::Alternation},
      {"Palatalization ch -> š", C::Alternation},
      {"Palatalization r -> ř", C::Alternation},
      {"Palatalization c -> č", C::Alternation},
      {"Cluster čk -> cc", C::Alternation},
      {"Assimilation s -> š", C::Alternation},
      {"Assimilation z -> ž", C::Alternation},
      {"Assimilation d -> z", C::Alternation},
      {"Assimilation t -> c", C::Alternation},
      {"Shortening ů -> o", C::Alternation},
      {"Hardening ě -> e", C::Alternation},
      {"Deletion of h in ch -> š", C::Technical},
      {"Spelling e -> ě after dentals and labials", C::Spelling},
      {"Spelling y -> i after soft consonants", C::Spelling},
  };
  if (auto it = classes.find(name); it != classes.end()) return it->second;
  return std::nullopt;
}

Census census(std::span<const TwoLevelRule> rules) {
  Census c;
  c.total = rules.size();
  for (const auto& r : rules) {
    auto cls = classify_rule(r.name);
    if (!cls) {
      c.unclassified.push_back(r.name);
      continue;
    }
    switch (*cls) {
      case RuleClass::Deletion: ++c.deletion; break;
      case RuleClass::Epenthesis: ++c.epenthesis; break;
      case RuleClass::Alternation: ++c.alternation; break;
      case RuleClass::Spelling: ++c.spelling; break;
      case RuleClass::Technical: ++c.technical; break;
    }
  }
  return c;
}

}  // namespace twolevel::czech
