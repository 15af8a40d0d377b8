#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace oracle {

using twolevel::ContextRegex;
using twolevel::kZero;

namespace {

using Word = std::vector<std::uint32_t>;

// End positions of matches of `re` starting at `i`.
std::set<std::size_t> ends(const ContextRegex& re, const Word& w, std::size_t i, std::uint32_t boundary);

std::set<std::size_t> ends_seq(const std::vector<ContextRegex>& seq, const Word& w, std::size_t i,
                               std::uint32_t boundary) {
  std::set<std::size_t> cur{i};
  for (const auto& part : seq) {
    std::set<std::size_t> next;
    for (std::size_t p : cur) {
      auto e = ends(part, w, p, boundary);
      next.insert(e.begin(), e.end());
    }
    cur = std::move(next);
  }
  return cur;
}

std::set<std::size_t> ends(const ContextRegex& re, const Word& w, std::size_t i, std::uint32_t boundary) {
  using K = ContextRegex::Kind;
  switch (re.kind) {
    case K::Atom:
      if (i < w.size() && w[i] != boundary &&
          std::find(re.pairs.begin(), re.pairs.end(), w[i]) != re.pairs.end()) {
        return {i + 1};
      }
      return {};
    case K::Boundary:
      if (i < w.size() && w[i] == boundary) return {i + 1};
      return {};
    case K::Concat: return ends_seq(re.children, w, i, boundary);
    case K::Union: {
      std::set<std::size_t> out;
      for (const auto& c : re.children) {
        auto e = ends(c, w, i, boundary);
        out.insert(e.begin(), e.end());
      }
      return out;
    }
    case K::Optional: {
      auto out = ends(re.children.at(0), w, i, boundary);
      out.insert(i);
      return out;
    }
    case K::Star:
    case K::Plus: {
      std::set<std::size_t> out;
      if (re.kind == K::Star) out.insert(i);
      std::vector<std::size_t> todo{i};
      std::set<std::size_t> visited{i};
      while (!todo.empty()) {
        std::size_t p = todo.back();
        todo.pop_back();
        for (std::size_t e : ends(re.children.at(0), w, p, boundary)) {
          out.insert(e);
          if (visited.insert(e).second) todo.push_back(e);
        }
      }
      return out;
    }
  }
  return {};
}

// Some suffix of w[0, j) matches `left`.
bool left_matches(const ContextRegex& left, const Word& w, std::size_t j, std::uint32_t b) {
  for (std::size_t i = 0; i <= j; ++i) {
    if (ends(left, w, i, b).count(j)) return true;
  }
  return false;
}

// Some prefix of w[k, end) matches `right`.
bool right_matches(const ContextRegex& right, const Word& w, std::size_t k, std::uint32_t b) {
  return !ends(right, w, k, b).empty();
}

}  // namespace

std::vector<PairString> candidates(const Alphabet& a, std::span<const SymbolId> lexical) {
  std::vector<PairString> out;
  PairString cur;
  std::function<void(std::size_t)> gap, symbol;
  gap = [&](std::size_t i) {
    symbol(i);
    for (PairId ins : a.insertions()) {
      cur.push_back(ins);
      symbol(i);
      cur.pop_back();
    }
  };
  symbol = [&](std::size_t i) {
    if (i == lexical.size()) {
      out.push_back(cur);
      return;
    }
    for (PairId p = 0; p < a.pairs().size(); ++p) {
      if (a.pairs()[p].lexical != lexical[i]) continue;
      cur.push_back(p);
      gap(i + 1);
      cur.pop_back();
    }
  };
  gap(0);
  return out;
}

bool satisfies(const TwoLevelRule& rule, const Alphabet& a, std::span<const PairId> s) {
  const auto b = static_cast<std::uint32_t>(a.pairs().size());
  Word w{b};
  w.insert(w.end(), s.begin(), s.end());
  w.push_back(b);
  const PairId center = *a.pair_id(rule.center);
  auto context_at = [&](std::size_t left_end, std::size_t right_start) {
    for (const auto& c : rule.contexts) {
      if (left_matches(c.left, w, left_end, b) && right_matches(c.right, w, right_start, b)) {
        return true;
      }
    }
    return false;
  };
  using Op = twolevel::RuleOperator;
  for (std::size_t j = 1; j + 1 < w.size(); ++j) {
    bool is_center = w[j] == center;
    if (is_center && rule.op == Op::Prohibition && context_at(j, j + 1)) return false;
    if (is_center && rule.restricts() && !context_at(j, j + 1)) return false;
  }
  if (!rule.coerces()) return true;
  if (rule.center.lexical == kZero) {
    // Every gap inside the frame where a context holds must hold the insertion.
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (w[k] != center && context_at(k, k)) return false;
    }
    return true;
  }
  for (std::size_t j = 1; j + 1 < w.size(); ++j) {
    const auto& p = a.pairs()[w[j]];
    if (p.lexical == rule.center.lexical && w[j] != center && context_at(j, j + 1)) return false;
  }
  return true;
}

bool accepted(std::span<const TwoLevelRule> rules, const Alphabet& a, std::span<const PairId> s) {
  return std::all_of(rules.begin(), rules.end(),
                     [&](const TwoLevelRule& r) { return satisfies(r, a, s); });
}

std::set<std::string> surfaces(std::span<const TwoLevelRule> rules, const Alphabet& a,
                               std::span<const SymbolId> lexical) {
  std::set<std::string> out;
  for (const auto& c : candidates(a, lexical)) {
    if (!accepted(rules, a, c)) continue;
    std::string s;
    for (PairId p : c) {
      SymbolId sym = a.pairs()[p].surface;
      if (sym != kZero) s += a.name(sym);
    }
    out.insert(s);
  }
  return out;
}

namespace {

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

bool coin(std::mt19937& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace

Instance random_instance(std::mt19937& rng) {
  const std::vector<std::string> letter_pool = {"a", "b", "d", "e", "i", "k", "o", "t", "s"};
  const std::vector<std::string> marker_pool = {"^1P1", "^2P0", "^N1", "^E2", "^A2"};

  std::vector<std::string> letters = letter_pool;
  std::shuffle(letters.begin(), letters.end(), rng);
  letters.resize(std::uniform_int_distribution<std::size_t>(2, 6)(rng));
  std::vector<std::string> markers = marker_pool;
  std::shuffle(markers.begin(), markers.end(), rng);
  markers.resize(2);

  // Feasible pairs beyond the identities.
  std::vector<std::string> extra;
  for (const auto& l : letters) {
    if (coin(rng, 0.4)) extra.push_back(l + ":0");
    if (coin(rng, 0.4)) {
      const auto& t = pick(rng, letters);
      if (t != l) extra.push_back(l + ":" + t);
    }
  }
  if (coin(rng, 0.5)) extra.push_back("0:" + pick(rng, letters));
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());

  Instance inst;
  inst.alphabet = "Alphabet\n";
  for (const auto& m : markers) inst.alphabet += " " + m + ":0";
  for (const auto& p : extra) inst.alphabet += " " + p;
  inst.alphabet += "\n";

  std::vector<std::string> centers = extra;
  for (const auto& l : letters) centers.push_back(l);
  auto atom = [&]() -> std::string {
    switch (std::uniform_int_distribution<int>(0, 7)(rng)) {
      case 0: return pick(rng, letters);
      case 1: return pick(rng, letters) + ":";
      case 2: return ":" + pick(rng, letters);
      case 3: return pick(rng, markers) + ":";
      case 4: return "?";
      case 5: return coin(rng, 0.5) ? "Vowel" : "Cons:";
      case 6: return extra.empty() ? pick(rng, letters) : pick(rng, extra);
      default: return "[ " + pick(rng, letters) + " | " + pick(rng, markers) + ": ]";
    }
  };
  auto element = [&]() -> std::string {
    std::string x = atom();
    switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
      case 0: return "( " + x + " )";
      case 1: return x + "*";
      default: return x;
    }
  };
  auto side = [&](bool left) {
    std::string out;
    int n = std::uniform_int_distribution<int>(0, 2)(rng);
    if (left && coin(rng, 0.15)) out += "# ";
    for (int i = 0; i < n; ++i) out += element() + " ";
    if (!left && coin(rng, 0.15)) out += "# ";
    return out;
  };
  const std::vector<std::string> ops = {"<=>", "=>", "<=", "/<="};
  int rule_count = std::uniform_int_distribution<int>(1, 4)(rng);
  for (int r = 0; r < rule_count; ++r) {
    inst.rules += "\"r" + std::to_string(r) + "\"\n" + pick(rng, centers) + " " + pick(rng, ops);
    int contexts = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int c = 0; c < contexts; ++c) inst.rules += " " + side(true) + "_ " + side(false) + ";\n";
  }

  std::vector<std::string> symbols = letters;
  symbols.insert(symbols.end(), markers.begin(), markers.end());
  for (int k = 0; k < 3; ++k) {
    std::string in;
    int len = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int i = 0; i < len; ++i) in += pick(rng, symbols);
    inst.inputs.push_back(in);
  }
  return inst;
}

}  // namespace oracle
