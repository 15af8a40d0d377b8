#include <algorithm>
#include <functional>
#include <map>

#include "twolevel/rules.hpp"
#include "twolevel/text.hpp"

namespace twolevel {
namespace {

// End positions reachable by matching `re` from `start` in `w`.
std::vector<bool> match(const ContextRegex& re, std::span<const fsa::Label> w, std::size_t start,
                        fsa::Label boundary) {
  std::vector<bool> ends(w.size() + 1, false);
  switch (re.kind) {
    case ContextRegex::Kind::Atom:
      if (start < w.size() && w[start] != boundary &&
          std::binary_search(re.pairs.begin(), re.pairs.end(), w[start])) {
        ends[start + 1] = true;
      }
      return ends;
    case ContextRegex::Kind::Boundary:
      if (start < w.size() && w[start] == boundary) ends[start + 1] = true;
      return ends;
    case ContextRegex::Kind::Concat: {
      ends[start] = true;
      for (const auto& c : re.children) {
        std::vector<bool> next(w.size() + 1, false);
        for (std::size_t p = 0; p <= w.size(); ++p) {
          if (!ends[p]) continue;
          auto sub = match(c, w, p, boundary);
          for (std::size_t q = 0; q <= w.size(); ++q) next[q] = next[q] || sub[q];
        }
        ends = std::move(next);
      }
      return ends;
    }
    case ContextRegex::Kind::Union:
      for (const auto& c : re.children) {
        auto sub = match(c, w, start, boundary);
        for (std::size_t q = 0; q <= w.size(); ++q) ends[q] = ends[q] || sub[q];
      }
      return ends;
    case ContextRegex::Kind::Optional: {
      ends = match(re.children.at(0), w, start, boundary);
      ends[start] = true;
      return ends;
    }
    case ContextRegex::Kind::Star:
    case ContextRegex::Kind::Plus: {
      std::vector<bool> frontier(w.size() + 1, false);
      if (re.kind == ContextRegex::Kind::Star) ends[start] = true;
      frontier[start] = true;
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<bool> next(w.size() + 1, false);
        for (std::size_t p = 0; p <= w.size(); ++p) {
          if (!frontier[p]) continue;
          auto sub = match(re.children.at(0), w, p, boundary);
          for (std::size_t q = 0; q <= w.size(); ++q) {
            if (sub[q] && !ends[q]) {
              ends[q] = true;
              next[q] = true;
              grew = true;
            }
          }
        }
        frontier = std::move(next);
      }
      return ends;
    }
  }
  return ends;
}

bool left_matches(const ContextRegex& re, std::span<const fsa::Label> w, std::size_t at,
                  fsa::Label b) {
  for (std::size_t j = 0; j <= at; ++j) {
    if (match(re, w, j, b)[at]) return true;
  }
  return false;
}

bool right_matches(const ContextRegex& re, std::span<const fsa::Label> w, std::size_t from,
                   fsa::Label b) {
  auto ends = match(re, w, from, b);
  return std::find(ends.begin(), ends.end(), true) != ends.end();
}

}  // namespace

std::vector<std::size_t> violations(const TwoLevelRule& rule, const Alphabet& a,
                                    std::span<const PairId> s) {
  const fsa::Label b = boundary_label(a);
  std::vector<fsa::Label> w;
  w.push_back(b);
  w.insert(w.end(), s.begin(), s.end());
  w.push_back(b);
  const PairId center = a.pair_id(rule.center).value();

  auto in_context = [&](std::size_t left_end, std::size_t right_start) {
    for (const auto& c : rule.contexts) {
      if (left_matches(c.left, w, left_end, b) && right_matches(c.right, w, right_start, b)) {
        return true;
      }
    }
    return false;
  };

  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    const SymbolPair p = a.pairs()[w[i]];
    bool bad = false;
    if (w[i] == center) {
      if (rule.restricts() && !in_context(i, i + 1)) bad = true;
      if (rule.op == RuleOperator::Prohibition && in_context(i, i + 1)) bad = true;
    } else if (rule.coerces() && rule.center.lexical != kZero &&
               p.lexical == rule.center.lexical && in_context(i, i + 1)) {
      bad = true;
    }
    if (bad) out.push_back(i - 1);
  }
  if (rule.coerces() && rule.center.lexical == kZero) {
    for (std::size_t g = 1; g < w.size(); ++g) {
      if (w[g] != center && in_context(g, g)) out.push_back(g - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

Trace trace(std::span<const RuleAutomaton> rules, const Alphabet& a,
            std::span<const SymbolId> lexical, const std::optional<std::string>& surface,
            std::size_t limit) {
  Trace out;
  const fsa::Label b = boundary_label(a);
  const std::optional<std::string> wanted =
      surface ? std::optional<std::string>(text::normalize(*surface)) : std::nullopt;
  std::map<std::string, Rejection> rejected;
  std::size_t seen = 0;
  PairString current;

  auto evaluate = [&](const PairString& ps) {
    std::string surf = surface_of(ps, a);
    if (wanted && surf != *wanted) return;
    std::vector<fsa::Label> w{b};
    w.insert(w.end(), ps.begin(), ps.end());
    w.push_back(b);
    std::vector<fsa::State> st(rules.size());
    for (std::size_t r = 0; r < rules.size(); ++r) st[r] = rules[r].dfa.initial();
    std::optional<std::pair<std::size_t, std::size_t>> first;  // (step, rule)
    for (std::size_t t = 0; t < w.size() && !first; ++t) {
      for (std::size_t r = 0; r < rules.size(); ++r) {
        st[r] = rules[r].dfa.next(st[r], w[t]);
        if (!rules[r].live[st[r]]) {
          first = {t, r};
          break;
        }
      }
    }
    if (!first) {
      for (std::size_t r = 0; r < rules.size(); ++r) {
        if (!rules[r].dfa.is_final(st[r])) {
          first = {w.size() - 1, r};
          break;
        }
      }
    }
    if (!first) {
      out.accepted.push_back(ps);
      return;
    }
    const auto& rule = rules[first->second].rule;
    auto sites = violations(rule, a, ps);
    std::size_t position = sites.empty() ? std::min(first->first, ps.size()) : sites.front() + 1;
    Rejection rej{surf, rule.name, position, first->first, ps};
    // Explain each surface by its most literal alignment, then the one that
    // got furthest before failing.
    auto edits = [&](const PairString& x) {
      std::size_t n = 0;
      for (PairId p : x) {
        const auto& pr = a.pairs()[p];
        if (!pr.identity() && !a.is_marker(pr.lexical)) ++n;
      }
      return n;
    };
    auto it = rejected.find(surf);
    if (it == rejected.end()) {
      rejected.emplace(surf, std::move(rej));
    } else {
      std::size_t mine = edits(rej.pairs), theirs = edits(it->second.pairs);
      if (mine < theirs || (mine == theirs && rej.detected_at > it->second.detected_at)) {
        it->second = std::move(rej);
      }
    }
  };

  // With a target surface, only prefixes of it are worth extending.
  std::string produced;
  auto push = [&](PairId p) {
    current.push_back(p);
    SymbolId sym = a.pairs()[p].surface;
    std::size_t before = produced.size();
    if (sym != kZero) produced += a.name(sym);
    bool ok = !wanted || wanted->compare(0, produced.size(), produced) == 0;
    return std::pair{before, ok};
  };
  auto pop = [&](std::size_t before) {
    current.pop_back();
    produced.resize(before);
  };

  std::function<void(std::size_t, bool)> walk = [&](std::size_t i, bool after_insertion) {
    if (seen >= limit) {
      out.truncated = true;
      return;
    }
    if (!after_insertion) {
      for (PairId p : a.insertions()) {
        auto [before, ok] = push(p);
        if (ok) walk(i, true);
        pop(before);
      }
    }
    if (i == lexical.size()) {
      ++seen;
      evaluate(current);
      return;
    }
    for (PairId p : a.realizations(lexical[i])) {
      auto [before, ok] = push(p);
      if (ok) walk(i + 1, false);
      pop(before);
    }
  };
  walk(0, false);

  std::sort(out.accepted.begin(), out.accepted.end());
  std::set<std::string> accepted_surfaces;
  for (const auto& ps : out.accepted) accepted_surfaces.insert(surface_of(ps, a));
  for (auto& [surf, rej] : rejected) {
    if (!accepted_surfaces.count(surf)) out.rejected.push_back(std::move(rej));
  }
  return out;
}

}  // namespace twolevel
