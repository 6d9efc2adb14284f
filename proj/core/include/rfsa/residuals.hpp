#pragma once

#include <cstddef>
#include <vector>

#include "rfsa/automaton.hpp"

namespace rfsa {

/// The residual languages of L, identified with the states of its minimal
/// DFA, together with their pairwise inclusion relation.
class ResidualIndex {
public:
  /// `base` must be minimal, deterministic and total; throws ContractError
  /// otherwise.
  explicit ResidualIndex(Automaton base);

  const Automaton& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.num_states(); }
  /// L_q1 ⊆ L_q2.
  bool includes(State q1, State q2) const;
  /// L_q1 ⊊ L_q2.
  bool strictly_includes(State q1, State q2) const;

private:
  Automaton base_;
  std::vector<bool> inclusion_; // row-major q1 * n + q2
};

ResidualIndex residual_index(const Automaton& minimal_dfa);

/// A residual is prime iff it differs from the union of the residuals
/// strictly contained in it.
bool is_prime(const ResidualIndex& idx, State q);
std::size_t prime_count(const ResidualIndex& idx);

/// Canonical RFSA of L(minimal_dfa): one state per prime residual (in base
/// state order), initial states the primes included in L, final states the
/// primes containing the empty word, and q --a--> p whenever L_p ⊆ a^{-1}L_q.
Automaton canonical_rfsa(const Automaton& minimal_dfa);

/// The subsets of B's states that are reached from B's initial set by some
/// word (including the empty subset when some word reaches it).
struct StateSetFamily {
  Automaton ground;
  std::vector<StateSet> members;
};

StateSetFamily reachable_state_sets(const Automaton& b);

/// p is coverable iff it is the union of the other members it contains. The
/// empty set counts as coverable (empty union).
bool is_coverable_state(const StateSet& p, const StateSetFamily& family);

/// Non-coverable reachable subsets of B, wired as the canonical RFSA of L(B)
/// when the reversal of B is an RFSA whose states are all reachable.
Automaton c_of_b(const Automaton& b);

/// Least number of contexts whose acceptance vectors pairwise separate the
/// states of a minimal DFA, by exhaustive search over every realizable
/// column. Refuses (BudgetError) more than kMaxContextSearchStates states.
inline constexpr std::size_t kMaxContextSearchStates = 4;
std::size_t min_distinguishing_context_count(const Automaton& minimal_dfa);

} // namespace rfsa
