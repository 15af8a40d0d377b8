#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "twolevel/analyzer.hpp"
#include "twolevel/czech.hpp"
#include "twolevel/error.hpp"

using namespace twolevel;

namespace {

const Lexicon& lexicon() {
  static const Lexicon lex = parse_lexicon(czech::builtin_lexicon(), czech::grammar().alphabet);
  return lex;
}

const FormIndex& index() {
  static const FormIndex idx = build_index(lexicon(), czech::grammar());
  return idx;
}

std::vector<std::string> tags(const std::vector<Analysis>& as) {
  std::vector<std::string> out;
  for (const auto& a : as) out.push_back(a.lemma + " " + a.tag);
  return out;
}

}  // namespace

TEST_CASE("analysis examples") {
  CHECK(tags(analyze(index(), "matce")) == std::vector<std::string>{"matka DatSg", "matka LocSg"});
  CHECK(analyze(index(), "zzz").empty());
  CHECK(analyze(index(), "").empty());
  CHECK(tags(analyze(index(), "úřednic")) == std::vector<std::string>{"úředník Fem.GenPl"});
  CHECK(tags(analyze(index(), "Matce")) == tags(analyze(index(), "matce")));
  auto lide = analyze(index(), "lidé");
  REQUIRE_FALSE(lide.empty());
  for (const auto& a : lide) CHECK(a.via_exception);
}

TEST_CASE("generate_form") {
  const auto& g = czech::grammar();
  using S = std::set<std::string>;
  CHECK(generate_form(lexicon(), g, "doktorka", "PossAdj.GenPl") == S{"doktorčiných"});
  CHECK(generate_form(lexicon(), g, "korek", "InstrSg") == S{"korkem"});
  CHECK(generate_form(lexicon(), g, "chodba", "GenPl") == S{"chodeb"});
  CHECK(generate_form(lexicon(), g, "matka", "GenPl") == S{"matek"});
  CHECK(generate_form(lexicon(), g, "sladit", "PassPart") == S{"sladěný", "slazený"});
  CHECK_THROWS_AS(generate_form(lexicon(), g, "nope", "NomSg"), ContentError);
  CHECK_THROWS_AS(generate_form(lexicon(), g, "korek", "Pres1Sg"), ContentError);
}

TEST_CASE("small indexes") {
  const auto& g = czech::grammar();
  auto empty = build_index(parse_lexicon("", g.alphabet), g);
  CHECK(empty.form_count() == 0);
  CHECK(empty.analysis_count() == 0);
  auto one = build_index(
      parse_lexicon("ENDINGS indecl\nForm\nPARADIGMS\nindecl : indecl\nENTRIES\ntaxi indecl taxi\n",
                    g.alphabet),
      g);
  CHECK(one.form_count() == 1);
  CHECK(tags(one.lookup("taxi")) == std::vector<std::string>{"taxi Form"});
}

TEST_CASE("index size equals the realized forms") {
  const auto& g = czech::grammar();
  std::size_t n = 0;
  for (const auto& e : lexicon().entries) {
    for (const auto& f : expand(e, lexicon())) {
      n += f.exception() ? 1 : g.realize(g.alphabet.spell(f.lexical)).size();
    }
  }
  CHECK(index().analysis_count() == n);
}

TEST_CASE("round trip and soundness") {
  const auto& g = czech::grammar();
  std::size_t checked = 0;
  for (const auto& e : lexicon().entries) {
    for (const auto& f : expand(e, lexicon())) {
      for (const auto& s : generate_form(lexicon(), g, e.lemma, f.tag)) {
        bool found = false;
        for (const auto& a : analyze(index(), s)) found = found || (a.lemma == e.lemma && a.tag == f.tag);
        CHECK_MESSAGE(found, e.lemma << " " << f.tag << " " << s);
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
  for (const auto& [surface, analyses] : index().forms()) {
    for (const auto& a : analyses) {
      CHECK_MESSAGE(generate_form(lexicon(), g, a.lemma, a.tag).count(surface), surface);
    }
  }
}

TEST_CASE("index build is deterministic") {
  CHECK(build_index(lexicon(), czech::grammar()) == index());
  auto shuffled = lexicon();
  std::mt19937 rng(11);
  std::shuffle(shuffled.entries.begin(), shuffled.entries.end(), rng);
  CHECK(build_index(shuffled, czech::grammar()) == index());
}

TEST_CASE("index file round trip") {
  FormIndex idx = index();
  idx.stamp = {content_hash("a"), content_hash("r"), content_hash("l")};
  std::stringstream ss;
  write_index(idx, ss);
  auto back = read_index(ss);
  CHECK(back == idx);
  CHECK(back.stamp == idx.stamp);

  auto bad = [](const std::string& text) {
    std::istringstream in(text);
    return read_index(in, "bad.idx");
  };
  CHECK_THROWS_AS(bad(""), SyntaxError);
  CHECK_THROWS_AS(bad("twolevel-index 99\n"), SyntaxError);
  CHECK_THROWS_AS(bad("twolevel-index 1\nalphabet zz\n"), SyntaxError);
  std::stringstream small;
  write_index(build_index(parse_lexicon("", czech::grammar().alphabet), czech::grammar()), small);
  std::string text = small.str() + "form\tonly-two\n";
  CHECK_THROWS_AS(bad(text), SyntaxError);
}

TEST_CASE("content hash") {
  CHECK(content_hash("") == 0xcbf29ce484222325ULL);
  CHECK(content_hash("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(content_hash("a") != content_hash("b"));
}

TEST_CASE("coverage") {
  auto empty = coverage(index(), "");
  CHECK(empty.tokens == 0);
  CHECK_FALSE(empty.ratio());
  CHECK_FALSE(empty.type_ratio());

  std::string all;
  for (const auto& [form, _] : index().forms()) all += form + " ";
  auto closed = coverage(index(), all);
  REQUIRE(closed.ratio());
  CHECK(*closed.ratio() == 1.0);
  CHECK(closed.top_unknown.empty());

  auto half = coverage(index(), "matce, korkem. Chodeb! qqq xyzzy blorf", 2);
  CHECK(half.tokens == 6);
  CHECK(half.analyzed == 3);
  CHECK(*half.ratio() == doctest::Approx(0.5));
  CHECK(half.top_unknown.size() == 2);
}
