#include "twolevel/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace twolevel::fsa {

State Nfa::add_state(bool final) {
  finals_.push_back(final);
  epsilon_.emplace_back();
  edges_.emplace_back();
  return static_cast<State>(finals_.size() - 1);
}

void Nfa::add_edge(State from, LabelSet labels, State to) {
  if (labels.size() != alphabet_size_) throw std::invalid_argument("label set size mismatch");
  edges_.at(from).push_back({std::make_shared<const LabelSet>(std::move(labels)), to});
}

State Nfa::absorb(const Nfa& other) {
  if (other.alphabet_size_ != alphabet_size_) throw std::invalid_argument("alphabet mismatch");
  const auto offset = static_cast<State>(state_count());
  for (State s = 0; s < other.state_count(); ++s) {
    finals_.push_back(other.finals_[s]);
    epsilon_.emplace_back();
    for (State t : other.epsilon_[s]) epsilon_.back().push_back(t + offset);
    edges_.emplace_back();
    for (const auto& e : other.edges_[s]) edges_.back().push_back({e.labels, e.to + offset});
  }
  return offset;
}

Nfa Nfa::epsilon(std::size_t alphabet_size) {
  Nfa n(alphabet_size);
  n.set_initial(n.add_state(true));
  return n;
}

Nfa Nfa::empty(std::size_t alphabet_size) {
  Nfa n(alphabet_size);
  n.set_initial(n.add_state(false));
  return n;
}

Nfa Nfa::symbol(LabelSet labels) {
  Nfa n(labels.size());
  State a = n.add_state();
  State b = n.add_state(true);
  n.set_initial(a);
  n.add_edge(a, std::move(labels), b);
  return n;
}

Nfa concat(const Nfa& a, const Nfa& b) {
  Nfa out = a;
  const State off = out.absorb(b);
  for (State s = 0; s < a.state_count(); ++s) {
    if (a.is_final(s)) {
      out.set_final(s, false);
      out.add_epsilon(s, b.initial() + off);
    }
  }
  return out;
}

Nfa unite(const Nfa& a, const Nfa& b) {
  Nfa out(a.alphabet_size());
  State start = out.add_state();
  out.set_initial(start);
  State oa = out.absorb(a);
  State ob = out.absorb(b);
  out.add_epsilon(start, a.initial() + oa);
  out.add_epsilon(start, b.initial() + ob);
  return out;
}

Nfa star(const Nfa& a) {
  Nfa out(a.alphabet_size());
  State start = out.add_state(true);
  out.set_initial(start);
  State off = out.absorb(a);
  out.add_epsilon(start, a.initial() + off);
  for (State s = 0; s < a.state_count(); ++s) {
    if (a.is_final(s)) out.add_epsilon(s + off, start);
  }
  return out;
}

Nfa optional(const Nfa& a) { return unite(a, Nfa::epsilon(a.alphabet_size())); }

Dfa::Dfa(std::size_t alphabet_size)
    : alphabet_size_(alphabet_size), finals_{false}, table_(alphabet_size, 0) {}

Dfa Dfa::universal(std::size_t alphabet_size) {
  Dfa d(alphabet_size);
  d.finals_[0] = true;
  return d;
}

Dfa Dfa::determinize(const Nfa& nfa) {
  const std::size_t k = nfa.alphabet_size();
  auto closure = [&](std::vector<State> set) {
    std::vector<State> stack = set;
    std::vector<bool> seen(nfa.state_count(), false);
    for (State s : set) seen[s] = true;
    while (!stack.empty()) {
      State s = stack.back();
      stack.pop_back();
      for (State t : nfa.epsilon_[s]) {
        if (!seen[t]) {
          seen[t] = true;
          set.push_back(t);
          stack.push_back(t);
        }
      }
    }
    std::sort(set.begin(), set.end());
    return set;
  };

  Dfa out(k);
  out.finals_.clear();
  out.table_.clear();
  std::map<std::vector<State>, State> index;
  std::deque<std::vector<State>> queue;
  auto intern = [&](std::vector<State> set) {
    auto [it, inserted] = index.emplace(std::move(set), static_cast<State>(out.finals_.size()));
    if (inserted) {
      bool f = std::any_of(it->first.begin(), it->first.end(),
                           [&](State s) { return nfa.is_final(s); });
      out.finals_.push_back(f);
      out.table_.resize(out.table_.size() + k, 0);
      queue.push_back(it->first);
    }
    return it->second;
  };
  intern(closure({nfa.initial()}));
  std::vector<std::vector<State>> moves(k);
  while (!queue.empty()) {
    std::vector<State> cur = std::move(queue.front());
    queue.pop_front();
    const State from = index.at(cur);
    for (auto& m : moves) m.clear();
    for (State s : cur) {
      for (const auto& e : nfa.edges_[s]) {
        const LabelSet& ls = *e.labels;
        for (Label l = 0; l < k; ++l) {
          if (ls[l]) moves[l].push_back(e.to);
        }
      }
    }
    for (Label l = 0; l < k; ++l) {
      auto& m = moves[l];
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      State to = intern(closure(m));
      out.table_[from * k + l] = to;
    }
  }
  return out;
}

bool Dfa::accepts(std::span<const Label> word) const {
  State s = initial();
  for (Label l : word) s = next(s, l);
  return is_final(s);
}

std::optional<std::vector<Label>> Dfa::shortest() const {
  const std::size_t n = state_count();
  std::vector<State> parent(n, 0);
  std::vector<Label> via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<State> queue{initial()};
  seen[initial()] = true;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (is_final(s)) {
      std::vector<Label> word;
      for (State c = s; c != initial(); c = parent[c]) word.push_back(via[c]);
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (Label l = 0; l < alphabet_size_; ++l) {
      State t = next(s, l);
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = s;
        via[t] = l;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

std::vector<bool> Dfa::live_states() const {
  const std::size_t n = state_count();
  std::vector<std::vector<State>> reverse(n);
  for (State s = 0; s < n; ++s) {
    for (Label l = 0; l < alphabet_size_; ++l) reverse[next(s, l)].push_back(s);
  }
  std::vector<bool> live(n, false);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s) {
    if (finals_[s]) {
      live[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : reverse[s]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

Dfa Dfa::complement() const {
  Dfa out = *this;
  out.finals_.flip();
  return out;
}

Dfa Dfa::trimmed_unreachable() const {
  const std::size_t n = state_count();
  std::vector<State> order;
  std::vector<State> renum(n, static_cast<State>(-1));
  renum[initial()] = 0;
  order.push_back(initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Label l = 0; l < alphabet_size_; ++l) {
      State t = next(order[i], l);
      if (renum[t] == static_cast<State>(-1)) {
        renum[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  Dfa out(alphabet_size_);
  out.finals_.assign(order.size(), false);
  out.table_.assign(order.size() * alphabet_size_, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    out.finals_[i] = finals_[order[i]];
    for (Label l = 0; l < alphabet_size_; ++l) {
      out.table_[i * alphabet_size_ + l] = renum[next(order[i], l)];
    }
  }
  return out;
}

Dfa Dfa::minimized() const {
  const Dfa reach = trimmed_unreachable();
  const std::size_t n = reach.state_count();
  const std::size_t k = alphabet_size_;
  // Moore refinement.
  std::vector<State> cls(n);
  for (State s = 0; s < n; ++s) cls[s] = reach.finals_[s] ? 1 : 0;
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<State>, State> sig_ids;
    std::vector<State> next_cls(n);
    std::vector<State> sig(k + 1);
    for (State s = 0; s < n; ++s) {
      sig[0] = cls[s];
      for (Label l = 0; l < k; ++l) sig[l + 1] = cls[reach.next(s, l)];
      auto [it, ins] = sig_ids.emplace(sig, static_cast<State>(sig_ids.size()));
      next_cls[s] = it->second;
    }
    cls = std::move(next_cls);
    if (sig_ids.size() == classes) break;
    classes = sig_ids.size();
  }
  Dfa quotient(k);
  quotient.finals_.assign(classes, false);
  quotient.table_.assign(classes * k, 0);
  for (State s = 0; s < n; ++s) {
    quotient.finals_[cls[s]] = reach.finals_[s];
    for (Label l = 0; l < k; ++l) quotient.table_[cls[s] * k + l] = cls[reach.next(s, l)];
  }
  // Re-root at the initial state's class and number states in BFS order.
  Dfa rooted(k);
  rooted.finals_ = quotient.finals_;
  rooted.table_ = quotient.table_;
  std::vector<State> perm(classes);
  for (State s = 0; s < classes; ++s) perm[s] = s;
  std::swap(perm[0], perm[cls[0]]);
  std::vector<State> inv(classes);
  for (State s = 0; s < classes; ++s) inv[perm[s]] = s;
  for (State s = 0; s < classes; ++s) {
    rooted.finals_[s] = quotient.finals_[perm[s]];
    for (Label l = 0; l < k; ++l) rooted.table_[s * k + l] = inv[quotient.next(perm[s], l)];
  }
  return rooted.trimmed_unreachable();
}

Nfa Dfa::to_nfa() const {
  Nfa out(alphabet_size_);
  for (State s = 0; s < state_count(); ++s) out.add_state(finals_[s]);
  out.set_initial(initial());
  for (State s = 0; s < state_count(); ++s) {
    std::map<State, LabelSet> by_target;
    for (Label l = 0; l < alphabet_size_; ++l) {
      auto& ls = by_target[next(s, l)];
      if (ls.empty()) ls.assign(alphabet_size_, false);
      ls[l] = true;
    }
    for (auto& [t, ls] : by_target) out.add_edge(s, std::move(ls), t);
  }
  return out;
}

template <typename Accept>
Dfa Dfa::product(const Dfa& a, const Dfa& b, Accept accept) {
  if (a.alphabet_size_ != b.alphabet_size_) throw std::invalid_argument("alphabet mismatch");
  const std::size_t k = a.alphabet_size_;
  Dfa out(k);
  out.finals_.clear();
  out.table_.clear();
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> order;
  auto intern = [&](State x, State y) {
    std::uint64_t key = (std::uint64_t{x} << 32) | y;
    auto [it, ins] = index.emplace(key, static_cast<State>(order.size()));
    if (ins) {
      order.emplace_back(x, y);
      out.finals_.push_back(accept(a.is_final(x), b.is_final(y)));
      out.table_.resize(out.table_.size() + k, 0);
    }
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [x, y] = order[i];
    for (Label l = 0; l < k; ++l) {
      State t = intern(a.next(x, l), b.next(y, l));
      out.table_[i * k + l] = t;
    }
  }
  return out.minimized();
}

Dfa intersect(const Dfa& a, const Dfa& b) {
  return Dfa::product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa unite(const Dfa& a, const Dfa& b) {
  return Dfa::product(a, b, [](bool x, bool y) { return x || y; });
}

Dfa difference(const Dfa& a, const Dfa& b) {
  return Dfa::product(a, b, [](bool x, bool y) { return x && !y; });
}

bool equivalent(const Dfa& a, const Dfa& b) {
  return Dfa::product(a, b, [](bool x, bool y) { return x != y; }).empty();
}

Dfa concat(std::span<const Dfa> parts) {
  if (parts.empty()) throw std::invalid_argument("concat of nothing");
  Nfa n = parts.front().to_nfa();
  for (std::size_t i = 1; i < parts.size(); ++i) n = concat(n, parts[i].to_nfa());
  return Dfa::determinize(n).minimized();
}

}  // namespace twolevel::fsa
