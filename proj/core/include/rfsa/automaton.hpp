#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rfsa/word.hpp"

namespace rfsa {

using State = std::uint32_t;
/// Sorted, duplicate-free list of state ids.
using StateSet = std::vector<State>;

/// Finite-state acceptor over a fixed alphabet. One type serves DFAs, NFAs
/// and RFSAs; determinism and totality are properties of the value, not of
/// the type. States are 0..n-1.
class Automaton {
public:
  Automaton() = default;
  Automaton(Alphabet alphabet, std::size_t num_states);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_symbols() const noexcept { return alphabet_.size(); }

  const StateSet& initial() const noexcept { return initial_; }
  const StateSet& final_states() const noexcept { return final_; }
  bool is_initial(State q) const;
  bool is_final(State q) const;

  /// Targets of (q, a); empty when the automaton is partial there.
  const StateSet& successors(State q, Symbol a) const;

  void add_initial(State q);
  void add_final(State q);
  void add_transition(State from, Symbol a, State to);

  /// |initial| = 1 and every (state, symbol) has at most one target.
  bool is_deterministic() const;
  /// Every (state, symbol) has at least one target.
  bool is_total() const;
  std::size_t num_transitions() const;

  friend bool operator==(const Automaton&, const Automaton&) = default;

private:
  void check_state(State q) const;
  void check_symbol(Symbol a) const;

  Alphabet alphabet_;
  std::size_t num_states_ = 0;
  StateSet initial_;
  StateSet final_;
  std::vector<StateSet> delta_; // indexed by q * |alphabet| + a
};

/// Inserts q into a sorted set; no-op if present.
void insert_sorted(StateSet& set, State q);
bool contains_sorted(const StateSet& set, State q);
bool is_subset(const StateSet& sub, const StateSet& super);
StateSet set_union(const StateSet& lhs, const StateSet& rhs);

} // namespace rfsa
