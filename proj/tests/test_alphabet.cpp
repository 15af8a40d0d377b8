#include <doctest.h>

#include <algorithm>

#include "twolevel/alphabet.hpp"
#include "twolevel/error.hpp"

using namespace twolevel;

namespace {
const std::vector<std::string> kLetters = {
    "a", "á", "b", "c", "č", "d", "ď", "e", "é", "ě", "f", "g", "h", "i",
    "í", "j", "k", "l", "m", "n", "ň", "o", "ó", "p", "q", "r", "ř", "s",
    "š", "t", "ť", "u", "ú", "ů", "v", "w", "x", "y", "ý", "z", "ž"};
}

TEST_CASE("marker declarations are feasible with zero surface") {
  auto a = Alphabet::parse("Alphabet\n ^1P0:0 ^E1:0\n");
  CHECK(a.feasible(a.parse_pair("^1P0:0")));
  CHECK(a.feasible(a.parse_pair("^E1:0")));
  CHECK(a.realizations(a.id("^1P0")).size() == 1);
}

TEST_CASE("bare marker item means marker:0") {
  auto a = Alphabet::parse("Alphabet\n ^N1\n");
  CHECK(a.feasible({a.id("^N1"), kZero}));
}

TEST_CASE("empty declaration has only the letter identities") {
  auto a = Alphabet::parse("");
  CHECK(a.pairs().size() == kLetters.size());
  for (const auto& p : a.pairs()) CHECK(p.identity());
  CHECK(a.insertions().empty());
}

TEST_CASE("k:č and k:c give k three realizations") {
  auto a = Alphabet::parse("Alphabet\n k:č k:c\n");
  std::vector<std::string> surf;
  for (PairId p : a.realizations(a.id("k"))) surf.push_back(a.name(a.pairs()[p].surface));
  std::sort(surf.begin(), surf.end());
  CHECK(surf == std::vector<std::string>{"c", "k", "č"});
}

TEST_CASE("classify") {
  auto a = Alphabet::parse("Alphabet\n ^N1:0\n");
  CHECK(a.classify("k") == Category::HardCons);
  CHECK(a.classify("ř") == Category::SoftCons);
  CHECK(a.classify("ě") == Category::SoftVowel);
  CHECK(a.classify("a") == Category::HardVowel);
  CHECK(a.classify("b") == Category::NeutralCons);
  CHECK(a.classify("^N1") == Category::Marker);
  CHECK(a.classify("0") == Category::Zero);
  CHECK(to_string(Category::HardCons) == "hard-cons");
  CHECK_THROWS_AS(a.classify("ä"), ContentError);
}

TEST_CASE("letter classes partition the letters") {
  auto a = Alphabet::parse("");
  for (const auto& l : kLetters) {
    int in = 0;
    for (auto set : {"HardCons", "SoftCons", "NeutralCons", "HardVowel", "SoftVowel"}) {
      in += a.member(set, l) ? 1 : 0;
    }
    CHECK_MESSAGE(in == 1, l);
    CHECK(a.member("Cons", l) != a.member("Vowel", l));
    bool cons = a.member("HardCons", l) || a.member("SoftCons", l) || a.member("NeutralCons", l);
    CHECK(cons == a.member("Cons", l));
  }
}

TEST_CASE("NonCČS membership") {
  auto a = Alphabet::parse("");
  CHECK_FALSE(a.member("NonCČS", "c"));
  CHECK_FALSE(a.member("NonCČS", "č"));
  CHECK_FALSE(a.member("NonCČS", "s"));
  CHECK(a.member("NonCČS", "k"));
  CHECK(a.member("Vowel", "ě"));
  CHECK(a.set("NonCČS").size() == kLetters.size() - 3);
  CHECK_THROWS_AS(a.member("Nope", "a"), ContentError);
}

TEST_CASE("set definitions") {
  auto a = Alphabet::parse(
      "Alphabet\n ^N1:0\nSets\n Dent = d t n ;\n Wide = Dent\n   l ;\n NoC = Letter - c č ;\n");
  CHECK(a.set("Dent").size() == 3);
  CHECK(a.set("Wide").size() == 4);
  CHECK(a.member("Wide", "l"));
  CHECK_FALSE(a.member("NoC", "č"));
  CHECK(a.member("NoC", "s"));
  // user sets override built-ins
  auto b = Alphabet::parse("Sets\n End = a ;\n");
  CHECK(b.set("End").size() == 1);
}

TEST_CASE("alphabet errors") {
  CHECK_THROWS_AS(Alphabet::parse("Sets\n X = a ;\n X = b ;\n"), ContentError);
  CHECK_THROWS_AS(Alphabet::parse("Alphabet\n k:ä\n"), ContentError);
  CHECK_THROWS_AS(Alphabet::parse("Alphabet\n ^N1:a\n"), ContentError);
  CHECK_THROWS_AS(Alphabet::parse("Sets\n X = Nope ;\n"), ContentError);
  try {
    Alphabet::parse("Alphabet\n k:č\n a:b:c\n", "t.alphabet");
    FAIL("expected an error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).starts_with("t.alphabet:3:"));
  } catch (const ContentError&) {
  }
}

TEST_CASE("parsing is deterministic") {
  const char* text = "Alphabet\n ^1P1:0 k:č a:0 0:e\nSets\n S = a b ;\n";
  auto x = Alphabet::parse(text);
  auto y = Alphabet::parse(text);
  CHECK(x.pairs() == y.pairs());
  CHECK(x.set_names() == y.set_names());
}

TEST_CASE("tokenize lexical strings") {
  auto a = Alphabet::parse("Alphabet\n ^2P0:0 ^E1:0\n");
  auto t = a.tokenize("korek^2P0^E1em");
  REQUIRE(t.size() == 9);
  CHECK(a.name(t[5]) == "^2P0");
  CHECK(a.name(t[6]) == "^E1");
  CHECK(a.spell(t) == "korek^2P0^E1em");
  CHECK(a.tokenize("chůze").size() == 5);  // ch is two symbols
  CHECK_THROWS_AS(a.tokenize("k^N1"), ContentError);
  CHECK_THROWS_AS(a.tokenize("ä"), ContentError);
}

TEST_CASE("marker parsing") {
  auto m = Marker::parse("^2P3");
  REQUIRE(m);
  CHECK(m->kind == Marker::Kind::P2);
  CHECK(m->strip == 3);
  CHECK(m->text() == "^2P3");
  CHECK(Marker::parse("^IK")->kind == Marker::Kind::IK);
  CHECK_FALSE(Marker::parse("^IK")->is_boundary());
  CHECK_FALSE(Marker::parse("^N5"));
  CHECK_FALSE(Marker::parse("N1"));
  CHECK(split_symbols("a^A2b") == std::vector<std::string>{"a", "^A2", "b"});
}
