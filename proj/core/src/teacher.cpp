#include <algorithm>

#include "rfsa/automaton_ops.hpp"
#include "rfsa/errors.hpp"
#include "rfsa/teacher.hpp"

namespace rfsa {

TeacherSession::TeacherSession(Automaton target) : target_(std::move(target)) {}

bool TeacherSession::membership(const Word& w) {
  if (!target_.alphabet().contains(w)) throw InputError("membership: symbol not in alphabet");
  ++stats_.mq_total;
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  ++stats_.mq_distinct;
  const bool answer = accepts(target_, w);
  cache_.emplace(w, answer);
  return answer;
}

std::optional<Word> TeacherSession::equivalence(const Automaton& hypothesis) {
  if (hypothesis.alphabet() != target_.alphabet()) {
    throw InputError("equivalence: hypothesis alphabet differs from the target's");
  }
  ++stats_.eq_count;
  auto witness = shortest_difference_witness(hypothesis, target_);
  if (witness) {
    stats_.longest_counterexample = std::max(stats_.longest_counterexample, witness->size());
  }
  return witness;
}

bool ReversalTeacher::membership(const Word& w) { return base_.membership(reverse_word(w)); }

std::optional<Word> ReversalTeacher::equivalence(const Automaton& hypothesis) {
  auto c = base_.equivalence(reverse_automaton(hypothesis));
  if (c) return reverse_word(*c);
  return c;
}

} // namespace rfsa
