#include "twolevel/rules.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "twolevel/error.hpp"

namespace twolevel {
namespace {

using fsa::Dfa;
using fsa::Label;
using fsa::LabelSet;
using fsa::Nfa;

std::size_t label_count(const Alphabet& a) { return a.pairs().size() + 1; }

fsa::Nfa regex_nfa(const ContextRegex& re, const Alphabet& a) {
  const std::size_t k = label_count(a);
  switch (re.kind) {
    case ContextRegex::Kind::Atom: {
      LabelSet ls(k, false);
      for (PairId p : re.pairs) ls[p] = true;
      return Nfa::symbol(std::move(ls));
    }
    case ContextRegex::Kind::Boundary: {
      LabelSet ls(k, false);
      ls[boundary_label(a)] = true;
      return Nfa::symbol(std::move(ls));
    }
    case ContextRegex::Kind::Concat: {
      Nfa out = Nfa::epsilon(k);
      for (const auto& c : re.children) out = concat(out, regex_nfa(c, a));
      return out;
    }
    case ContextRegex::Kind::Union: {
      Nfa out = Nfa::empty(k);
      for (const auto& c : re.children) out = unite(out, regex_nfa(c, a));
      return out;
    }
    case ContextRegex::Kind::Optional: return optional(regex_nfa(re.children.at(0), a));
    case ContextRegex::Kind::Star: return star(regex_nfa(re.children.at(0), a));
    case ContextRegex::Kind::Plus: {
      Nfa inner = regex_nfa(re.children.at(0), a);
      return concat(inner, star(inner));
    }
  }
  return Nfa::empty(k);
}

Dfa symbols(const Alphabet& a, const std::function<bool(Label)>& pick) {
  const std::size_t k = label_count(a);
  LabelSet ls(k, false);
  for (Label l = 0; l < k; ++l) ls[l] = pick(l);
  return Dfa::determinize(Nfa::symbol(std::move(ls))).minimized();
}

Dfa cat(std::initializer_list<Dfa> parts) {
  std::vector<Dfa> v(parts);
  return fsa::concat(v);
}

// # (non-boundary)* #
Dfa frame(const Alphabet& a) {
  const Label b = boundary_label(a);
  Dfa inner = symbols(a, [&](Label l) { return l != b; });
  std::vector<Dfa> v{symbols(a, [&](Label l) { return l == b; })};
  Nfa n = concat(concat(v[0].to_nfa(), star(inner.to_nfa())), v[0].to_nfa());
  return Dfa::determinize(n).minimized();
}

Dfa frame_prefix(const Alphabet& a) {
  const Label b = boundary_label(a);
  Dfa inner = symbols(a, [&](Label l) { return l != b; });
  Dfa hash = symbols(a, [&](Label l) { return l == b; });
  return Dfa::determinize(concat(hash.to_nfa(), star(inner.to_nfa()))).minimized();
}

Dfa frame_suffix(const Alphabet& a) {
  const Label b = boundary_label(a);
  Dfa inner = symbols(a, [&](Label l) { return l != b; });
  Dfa hash = symbols(a, [&](Label l) { return l == b; });
  return Dfa::determinize(concat(star(inner.to_nfa()), hash.to_nfa())).minimized();
}

}  // namespace

fsa::Dfa compile_regex(const ContextRegex& re, const Alphabet& alphabet) {
  return Dfa::determinize(regex_nfa(re, alphabet)).minimized();
}

RuleAutomaton compile_rule(const TwoLevelRule& rule, const Alphabet& a) {
  if (!a.feasible(rule.center)) {
    throw ContentError("rule '" + rule.name + "': center pair is not feasible");
  }
  if (rule.contexts.empty()) throw ContentError("rule '" + rule.name + "' has no context");
  const std::size_t k = label_count(a);
  const PairId center = *a.pair_id(rule.center);
  const Dfa sigma_star = Dfa::universal(k);

  // Prefixes #x... and suffixes ...x# of framed words.
  const Label b = boundary_label(a);
  const Dfa boundary = symbols(a, [&](Label l) { return l == b; });
  const Dfa word_start = frame_prefix(a);
  const Dfa word_end = frame_suffix(a);

  RuleAutomaton out;
  out.rule = rule;
  std::size_t empty_contexts = 0;
  for (const auto& c : rule.contexts) {
    Dfa left = cat({sigma_star, compile_regex(c.left, a)});
    Dfa right = cat({compile_regex(c.right, a), sigma_star});
    if (intersect(left, word_start).empty() || intersect(right, word_end).empty()) {
      ++empty_contexts;
      out.warnings.push_back("context '" + c.text + "' can never match inside a word");
    }
    out.context_languages.emplace_back(std::move(left), std::move(right));
  }
  if (empty_contexts == rule.contexts.size()) {
    out.warnings.push_back("rule is vacuous: no context can match");
  }

  const Dfa center_dfa = symbols(a, [&](Label l) { return l == center; });
  Dfa bad(k);
  const std::size_t n = out.context_languages.size();

  if (rule.restricts() || rule.op == RuleOperator::Prohibition) {
    if (rule.op == RuleOperator::Prohibition) {
      for (const auto& [lc, rc] : out.context_languages) bad = unite(bad, cat({lc, center_dfa, rc}));
    } else {
      // An occurrence is bad unless some context matches on both sides:
      // choose, per context, which side fails.
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Dfa left_fail = sigma_star;
        Dfa right_fail = sigma_star;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (std::size_t{1} << i)) {
            left_fail = intersect(left_fail, out.context_languages[i].first.complement());
          } else {
            right_fail = intersect(right_fail, out.context_languages[i].second.complement());
          }
        }
        if (left_fail.empty() || right_fail.empty()) continue;
        bad = unite(bad, cat({left_fail, center_dfa, right_fail}));
      }
    }
  }

  if (rule.coerces()) {
    if (rule.center.lexical == kZero) {
      // Insertion: wherever a context matches around a gap, the next pair
      // must be the inserted one.
      // Only gaps inside the #...# frame count.
      const Dfa opens = cat({boundary, sigma_star});
      const Dfa closes = cat({sigma_star, boundary});
      Dfa starts_with_center = cat({center_dfa, sigma_star});
      for (const auto& [lc, rc] : out.context_languages) {
        bad = unite(bad, cat({intersect(lc, opens),
                              intersect(difference(rc, starts_with_center), closes)}));
      }
    } else {
      Dfa others = symbols(a, [&](Label l) {
        if (l >= a.pairs().size()) return false;
        const auto& p = a.pairs()[l];
        return p.lexical == rule.center.lexical && p.surface != rule.center.surface;
      });
      if (!others.empty()) {
        for (const auto& [lc, rc] : out.context_languages) bad = unite(bad, cat({lc, others, rc}));
      }
    }
  }

  out.dfa = difference(frame(a), bad);
  out.live = out.dfa.live_states();
  return out;
}

bool accepts(std::span<const RuleAutomaton> rules, const Alphabet& a, std::span<const PairId> s) {
  const Label b = boundary_label(a);
  for (PairId p : s) {
    if (p >= a.pairs().size()) throw ContentError("infeasible pair id " + std::to_string(p));
  }
  for (const auto& r : rules) {
    fsa::State st = r.dfa.next(r.dfa.initial(), b);
    for (PairId p : s) st = r.dfa.next(st, p);
    st = r.dfa.next(st, b);
    if (!r.dfa.is_final(st)) return false;
  }
  return true;
}

PairString parse_pair_string(std::string_view text, const Alphabet& a) {
  PairString out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
    if (i == start) break;
    std::string_view tok = text.substr(start, i - start);
    SymbolPair p = a.parse_pair(tok);
    auto id = a.pair_id(p);
    if (!id) throw ContentError("infeasible pair '" + std::string(tok) + "'");
    out.push_back(*id);
  }
  return out;
}

std::string format_pair_string(std::span<const PairId> s, const Alphabet& a) {
  std::string out;
  for (PairId p : s) {
    if (!out.empty()) out += ' ';
    out += a.pair_text(p);
  }
  return out;
}

std::string surface_of(std::span<const PairId> s, const Alphabet& a) {
  std::string out;
  for (PairId p : s) {
    SymbolId sym = a.pairs()[p].surface;
    if (sym != kZero) out += a.name(sym);
  }
  return out;
}

std::string lexical_of(std::span<const PairId> s, const Alphabet& a) {
  std::string out;
  for (PairId p : s) {
    SymbolId sym = a.pairs()[p].lexical;
    if (sym != kZero) out += a.name(sym);
  }
  return out;
}

std::vector<PairString> generate_pairs(std::span<const RuleAutomaton> rules, const Alphabet& a,
                                       std::span<const SymbolId> lexical) {
  for (SymbolId s : lexical) {
    if (s >= a.symbol_count() || s == kZero || a.realizations(s).empty()) {
      throw ContentError("lexical symbol without a feasible pair");
    }
  }
  const Label b = boundary_label(a);
  const std::size_t nr = rules.size();
  std::vector<PairString> results;
  PairString current;

  auto step = [&](const std::vector<fsa::State>& from, Label l, std::vector<fsa::State>& to) {
    to.resize(nr);
    for (std::size_t r = 0; r < nr; ++r) {
      to[r] = rules[r].dfa.next(from[r], l);
      if (!rules[r].live[to[r]]) return false;
    }
    return true;
  };

  std::function<void(std::size_t, bool, const std::vector<fsa::State>&)> walk =
      [&](std::size_t i, bool after_insertion, const std::vector<fsa::State>& states) {
        std::vector<fsa::State> next;
        if (!after_insertion) {
          for (PairId p : a.insertions()) {
            if (!step(states, p, next)) continue;
            current.push_back(p);
            walk(i, true, next);
            current.pop_back();
          }
        }
        if (i == lexical.size()) {
          if (!step(states, b, next)) return;
          for (std::size_t r = 0; r < nr; ++r) {
            if (!rules[r].dfa.is_final(next[r])) return;
          }
          results.push_back(current);
          return;
        }
        for (PairId p : a.realizations(lexical[i])) {
          if (!step(states, p, next)) continue;
          current.push_back(p);
          walk(i + 1, false, next);
          current.pop_back();
        }
      };

  std::vector<fsa::State> start(nr);
  for (std::size_t r = 0; r < nr; ++r) {
    start[r] = rules[r].dfa.next(rules[r].dfa.initial(), b);
    if (!rules[r].live[start[r]]) return results;
  }
  walk(0, false, start);
  std::sort(results.begin(), results.end());
  return results;
}

std::set<std::string> generate_surface(std::span<const RuleAutomaton> rules, const Alphabet& a,
                                       std::span<const SymbolId> lexical) {
  std::set<std::string> out;
  for (const auto& ps : generate_pairs(rules, a, lexical)) out.insert(surface_of(ps, a));
  return out;
}

std::string Conflict::witness() const {
  std::string out = left;
  if (!out.empty()) out += ' ';
  out += '_';
  if (!right.empty()) out += ' ' + right;
  return out;
}

std::vector<Conflict> detect_conflicts(std::span<const RuleAutomaton> rules, const Alphabet& a) {
  std::vector<Conflict> out;
  const Label b = boundary_label(a);
  const Dfa prefix = frame_prefix(a);
  const Dfa suffix = frame_suffix(a);
  auto show = [&](const std::vector<Label>& word, bool drop_front, bool drop_back) {
    std::size_t from = 0, to = word.size();
    if (drop_front && to > from && word[from] == b) ++from;
    if (drop_back && to > from && word[to - 1] == b) --to;
    std::string s;
    for (std::size_t i = from; i < to; ++i) {
      if (!s.empty()) s += ' ';
      s += word[i] == b ? std::string("#") : a.pair_text(word[i]);
    }
    return s;
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& r1 = rules[i].rule;
    if (!r1.coerces()) continue;
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      const auto& r2 = rules[j].rule;
      if (!r2.coerces() || r1.center.lexical != r2.center.lexical ||
          r1.center.surface == r2.center.surface) {
        continue;
      }
      for (std::size_t c1 = 0; c1 < rules[i].context_languages.size(); ++c1) {
        for (std::size_t c2 = 0; c2 < rules[j].context_languages.size(); ++c2) {
          const auto& [l1, rr1] = rules[i].context_languages[c1];
          const auto& [l2, rr2] = rules[j].context_languages[c2];
          Dfa left = intersect(intersect(l1, l2), prefix);
          auto lw = left.shortest();
          if (!lw) continue;
          Dfa right = intersect(intersect(rr1, rr2), suffix);
          auto rw = right.shortest();
          if (!rw) continue;
          out.push_back({r1.name, r2.name, c1, c2, show(*lw, true, false), show(*rw, false, true)});
        }
      }
    }
  }
  return out;
}

Grammar Grammar::compile(std::string_view alphabet_text, std::string_view rule_text,
                         const std::string& alphabet_source, const std::string& rule_source) {
  Grammar g{Alphabet::parse(alphabet_text, alphabet_source), {}};
  for (const auto& r : parse_rules(rule_text, g.alphabet, rule_source)) {
    g.rules.push_back(compile_rule(r, g.alphabet));
  }
  return g;
}

}  // namespace twolevel
