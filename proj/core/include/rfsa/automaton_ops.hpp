#pragma once

#include <optional>
#include <vector>

#include "rfsa/automaton.hpp"

namespace rfsa {

/// States reachable from `from` along w. Throws InputError on a foreign
/// symbol or out-of-range state.
StateSet run(const Automaton& a, const StateSet& from, const Word& w);
bool accepts(const Automaton& a, const Word& w);
/// Membership of w in L_q, the language accepted from state q alone.
bool accepts_from(const Automaton& a, State q, const Word& w);

/// Swaps initial and final states and inverts every arc.
Automaton reverse_automaton(const Automaton& a);

/// Result of the subset construction. State i of `dfa` stands for the subset
/// `subsets[i]` of the input's states; the empty subset appears when it is
/// reachable.
struct Determinized {
  Automaton dfa;
  std::vector<StateSet> subsets;
};

/// Subset construction over the reachable part. Output is deterministic and
/// total; states are numbered breadth-first with symbols in alphabet order.
Determinized determinize(const Automaton& a);

/// Myhill-Nerode quotient of a deterministic automaton (partial input is
/// completed with a sink first). The result is total and renumbered
/// breadth-first over the sorted alphabet, so two DFAs for the same
/// language minimize to identical values. Throws ContractError on
/// nondeterministic input.
Automaton minimize(const Automaton& dfa);

/// Removes useless states: those not reachable from an initial state or
/// unable to reach a final state. Surviving states keep their relative
/// order.
Automaton trim(const Automaton& a);

/// Shortlex-least word in the symmetric difference of L(a) and L(b), or
/// nullopt when the languages are equal. Throws InputError on alphabet
/// mismatch.
std::optional<Word> shortest_difference_witness(const Automaton& a, const Automaton& b);

inline bool equivalent(const Automaton& a, const Automaton& b) {
  return !shortest_difference_witness(a, b).has_value();
}

/// True iff some bijection of states preserves initial and final states and
/// every transition.
bool isomorphic(const Automaton& a, const Automaton& b);

/// Shortest (then least) word leading from `from` into exactly the state set
/// `target` in a deterministic automaton; nullopt if unreachable.
std::optional<Word> shortest_path(const Automaton& dfa, State from, State target);

} // namespace rfsa
