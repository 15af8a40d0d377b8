#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace twolevel::fsa {

using State = std::uint32_t;
using Label = std::uint32_t;
using LabelSet = std::vector<bool>;

/// Nondeterministic automaton with epsilon moves and set-labelled edges.
class Nfa {
 public:
  explicit Nfa(std::size_t alphabet_size) : alphabet_size_(alphabet_size) {}

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t state_count() const { return finals_.size(); }

  State add_state(bool final = false);
  void set_initial(State s) { initial_ = s; }
  State initial() const { return initial_; }
  void set_final(State s, bool f = true) { finals_.at(s) = f; }
  bool is_final(State s) const { return finals_.at(s); }

  void add_epsilon(State from, State to) { epsilon_.at(from).push_back(to); }
  void add_edge(State from, LabelSet labels, State to);

  /// Appends a copy of `other`; returns the offset of its states.
  State absorb(const Nfa& other);

  /// Single-state acceptor of the empty string or of nothing.
  static Nfa epsilon(std::size_t alphabet_size);
  static Nfa empty(std::size_t alphabet_size);
  /// Accepts exactly one symbol from `labels`.
  static Nfa symbol(LabelSet labels);

  friend Nfa concat(const Nfa& a, const Nfa& b);
  friend Nfa unite(const Nfa& a, const Nfa& b);
  friend Nfa star(const Nfa& a);
  friend Nfa optional(const Nfa& a);

 private:
  friend class Dfa;
  struct Edge {
    std::shared_ptr<const LabelSet> labels;
    State to;
  };

  std::size_t alphabet_size_;
  State initial_ = 0;
  std::vector<bool> finals_;
  std::vector<std::vector<State>> epsilon_;
  std::vector<std::vector<Edge>> edges_;
};

/// Complete deterministic automaton: every state has a move on every label.
class Dfa {
 public:
  /// Accepts nothing (one non-final sink).
  explicit Dfa(std::size_t alphabet_size = 0);

  static Dfa determinize(const Nfa& nfa);
  /// Accepts every string over the alphabet.
  static Dfa universal(std::size_t alphabet_size);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t state_count() const { return finals_.size(); }
  State initial() const { return 0; }
  bool is_final(State s) const { return finals_[s]; }
  State next(State s, Label l) const { return table_[s * alphabet_size_ + l]; }

  bool accepts(std::span<const Label> word) const;
  bool empty() const { return !shortest().has_value(); }
  /// Shortest accepted string; ties broken by smallest label.
  std::optional<std::vector<Label>> shortest() const;
  /// States from which some final state is reachable.
  std::vector<bool> live_states() const;

  Dfa complement() const;
  Dfa minimized() const;
  Nfa to_nfa() const;

  friend Dfa intersect(const Dfa& a, const Dfa& b);
  friend Dfa unite(const Dfa& a, const Dfa& b);
  friend Dfa difference(const Dfa& a, const Dfa& b);
  friend bool equivalent(const Dfa& a, const Dfa& b);

 private:
  template <typename Accept>
  static Dfa product(const Dfa& a, const Dfa& b, Accept accept);
  Dfa trimmed_unreachable() const;

  std::size_t alphabet_size_;
  std::vector<bool> finals_;
  std::vector<State> table_;
};

Nfa concat(const Nfa& a, const Nfa& b);
Nfa unite(const Nfa& a, const Nfa& b);
Nfa star(const Nfa& a);
Nfa optional(const Nfa& a);
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa unite(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);

/// Concatenation of deterministic languages, determinized and minimized.
Dfa concat(std::span<const Dfa> parts);

}  // namespace twolevel::fsa
