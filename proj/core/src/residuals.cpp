#include <algorithm>
#include <string>

#include "rfsa/automaton_ops.hpp"
#include "rfsa/errors.hpp"
#include "rfsa/residuals.hpp"

namespace rfsa {

namespace {

void require_minimal(const Automaton& dfa, const char* who) {
  if (!dfa.is_deterministic() || !dfa.is_total()) {
    throw ContractError(std::string(who) + ": expected a total deterministic automaton");
  }
  if (minimize(dfa).num_states() != dfa.num_states()) {
    throw ContractError(std::string(who) + ": automaton is not minimal");
  }
}

// L_x ⊆ L_y in a total DFA: no pair reachable from (x, y) is (final, non-final).
bool dfa_state_included(const Automaton& dfa, State x, State y) {
  const std::size_t n = dfa.num_states();
  std::vector<bool> seen(n * n, false);
  std::vector<std::pair<State, State>> stack{{x, y}};
  seen[x * n + y] = true;
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (dfa.is_final(p) && !dfa.is_final(q)) return false;
    for (Symbol s = 0; s < dfa.num_symbols(); ++s) {
      State tp = dfa.successors(p, s).front();
      State tq = dfa.successors(q, s).front();
      if (!seen[tp * n + tq]) {
        seen[tp * n + tq] = true;
        stack.emplace_back(tp, tq);
      }
    }
  }
  return true;
}

Automaton with_initial(const Automaton& a, const StateSet& initial) {
  Automaton out(a.alphabet(), a.num_states());
  for (State q : initial) out.add_initial(q);
  for (State q : a.final_states()) out.add_final(q);
  for (State q = 0; q < a.num_states(); ++q) {
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      for (State t : a.successors(q, s)) out.add_transition(q, s, t);
    }
  }
  return out;
}

} // namespace

ResidualIndex::ResidualIndex(Automaton base) : base_(std::move(base)) {
  require_minimal(base_, "residual_index");
  const std::size_t n = base_.num_states();
  inclusion_.assign(n * n, false);
  for (State x = 0; x < n; ++x) {
    for (State y = 0; y < n; ++y) {
      inclusion_[x * n + y] = x == y || dfa_state_included(base_, x, y);
    }
  }
}

bool ResidualIndex::includes(State q1, State q2) const {
  if (q1 >= size() || q2 >= size()) throw InputError("residual id out of range");
  return inclusion_[q1 * size() + q2];
}

bool ResidualIndex::strictly_includes(State q1, State q2) const {
  return includes(q1, q2) && !includes(q2, q1);
}

ResidualIndex residual_index(const Automaton& minimal_dfa) { return ResidualIndex(minimal_dfa); }

bool is_prime(const ResidualIndex& idx, State q) {
  if (q >= idx.size()) throw InputError("is_prime: residual id out of range");
  StateSet below;
  for (State p = 0; p < idx.size(); ++p) {
    if (idx.strictly_includes(p, q)) below.push_back(p);
  }
  const Automaton& base = idx.base();
  return !equivalent(with_initial(base, below), with_initial(base, StateSet{q}));
}

std::size_t prime_count(const ResidualIndex& idx) {
  std::size_t n = 0;
  for (State q = 0; q < idx.size(); ++q) n += is_prime(idx, q) ? 1 : 0;
  return n;
}

Automaton canonical_rfsa(const Automaton& minimal_dfa) {
  const ResidualIndex idx(minimal_dfa);
  const Automaton& base = idx.base();
  std::vector<State> primes;
  for (State q = 0; q < idx.size(); ++q) {
    if (is_prime(idx, q)) primes.push_back(q);
  }
  const State start = base.initial().front();
  Automaton out(base.alphabet(), primes.size());
  for (State i = 0; i < primes.size(); ++i) {
    const State p = primes[i];
    if (idx.includes(p, start)) out.add_initial(i);
    if (base.is_final(p)) out.add_final(i);
    for (Symbol s = 0; s < base.num_symbols(); ++s) {
      const State target = base.successors(p, s).front();
      for (State j = 0; j < primes.size(); ++j) {
        if (idx.includes(primes[j], target)) out.add_transition(i, s, j);
      }
    }
  }
  return out;
}

StateSetFamily reachable_state_sets(const Automaton& b) {
  return {b, determinize(b).subsets};
}

bool is_coverable_state(const StateSet& p, const StateSetFamily& family) {
  if (std::find(family.members.begin(), family.members.end(), p) == family.members.end()) {
    throw InputError("is_coverable_state: set is not a member of the family");
  }
  StateSet cover;
  for (const auto& m : family.members) {
    if (m != p && is_subset(m, p)) cover = set_union(cover, m);
  }
  return cover == p;
}

Automaton c_of_b(const Automaton& b) {
  const StateSetFamily family = reachable_state_sets(b);
  std::vector<StateSet> kept;
  for (const auto& p : family.members) {
    if (!is_coverable_state(p, family)) kept.push_back(p);
  }
  Automaton out(b.alphabet(), kept.size());
  for (State i = 0; i < kept.size(); ++i) {
    const StateSet& p = kept[i];
    if (is_subset(p, b.initial())) out.add_initial(i);
    if (std::any_of(p.begin(), p.end(), [&](State q) { return b.is_final(q); })) out.add_final(i);
    for (Symbol s = 0; s < b.num_symbols(); ++s) {
      const StateSet image = run(b, p, Word{s});
      for (State j = 0; j < kept.size(); ++j) {
        if (is_subset(kept[j], image)) out.add_transition(i, s, j);
      }
    }
  }
  return out;
}

std::size_t min_distinguishing_context_count(const Automaton& minimal_dfa) {
  if (minimal_dfa.num_states() > kMaxContextSearchStates) {
    throw BudgetError("min_distinguishing_context_count: more than " +
                      std::to_string(kMaxContextSearchStates) + " states");
  }
  require_minimal(minimal_dfa, "min_distinguishing_context_count");
  const std::size_t n = minimal_dfa.num_states();
  // Column of context e = {q : e ∈ L_q}, which is the subset reached by the
  // reversed context in the reversed automaton.
  const auto columns = determinize(reverse_automaton(minimal_dfa)).subsets;
  const std::size_t m = columns.size();

  auto separates_all = [&](const std::vector<std::size_t>& chosen) {
    for (State x = 0; x < n; ++x) {
      for (State y = x + 1; y < n; ++y) {
        bool split = std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
          return contains_sorted(columns[c], x) != contains_sorted(columns[c], y);
        });
        if (!split) return false;
      }
    }
    return true;
  };

  for (std::size_t k = 0; k <= m; ++k) {
    // Enumerate k-subsets of the columns in lexicographic order.
    std::vector<std::size_t> chosen(k);
    for (std::size_t i = 0; i < k; ++i) chosen[i] = i;
    for (;;) {
      if (separates_all(chosen)) return k;
      std::size_t i = k;
      while (i > 0 && chosen[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++chosen[i - 1];
      for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[j - 1] + 1;
    }
  }
  throw LearnerError("min_distinguishing_context_count: columns do not separate the states");
}

} // namespace rfsa
