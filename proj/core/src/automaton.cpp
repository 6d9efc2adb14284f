#include <algorithm>
#include <string>

#include "rfsa/automaton.hpp"
#include "rfsa/errors.hpp"

namespace rfsa {

void insert_sorted(StateSet& set, State q) {
  auto it = std::lower_bound(set.begin(), set.end(), q);
  if (it == set.end() || *it != q) set.insert(it, q);
}

bool contains_sorted(const StateSet& set, State q) {
  return std::binary_search(set.begin(), set.end(), q);
}

bool is_subset(const StateSet& sub, const StateSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

StateSet set_union(const StateSet& lhs, const StateSet& rhs) {
  StateSet out;
  out.reserve(lhs.size() + rhs.size());
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

Automaton::Automaton(Alphabet alphabet, std::size_t num_states)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      delta_(num_states * alphabet_.size()) {}

void Automaton::check_state(State q) const {
  if (q >= num_states_) {
    throw InputError("state " + std::to_string(q) + " out of range (" +
                     std::to_string(num_states_) + " states)");
  }
}

void Automaton::check_symbol(Symbol a) const {
  if (a >= alphabet_.size()) throw InputError("symbol index out of range");
}

bool Automaton::is_initial(State q) const { return contains_sorted(initial_, q); }
bool Automaton::is_final(State q) const { return contains_sorted(final_, q); }

const StateSet& Automaton::successors(State q, Symbol a) const {
  check_state(q);
  check_symbol(a);
  return delta_[q * alphabet_.size() + a];
}

void Automaton::add_initial(State q) {
  check_state(q);
  insert_sorted(initial_, q);
}

void Automaton::add_final(State q) {
  check_state(q);
  insert_sorted(final_, q);
}

void Automaton::add_transition(State from, Symbol a, State to) {
  check_state(from);
  check_state(to);
  check_symbol(a);
  insert_sorted(delta_[from * alphabet_.size() + a], to);
}

bool Automaton::is_deterministic() const {
  return initial_.size() == 1 &&
         std::all_of(delta_.begin(), delta_.end(), [](const StateSet& t) { return t.size() <= 1; });
}

bool Automaton::is_total() const {
  return std::none_of(delta_.begin(), delta_.end(), [](const StateSet& t) { return t.empty(); });
}

std::size_t Automaton::num_transitions() const {
  std::size_t n = 0;
  for (const auto& t : delta_) n += t.size();
  return n;
}

} // namespace rfsa
