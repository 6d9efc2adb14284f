#include <algorithm>
#include <array>
#include <string>

#include "rfsa/automaton_ops.hpp"
#include "rfsa/errors.hpp"
#include "rfsa/learners.hpp"

namespace rfsa {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 4> kNames{{
    {Algorithm::lstar, "lstar"},
    {Algorithm::nlstar, "nlstar"},
    {Algorithm::rev2step, "rev2step"},
    {Algorithm::prime2step, "prime2step"},
}};

// Adds every suffix of the counterexample to E. Returns whether E grew.
bool add_counterexample_suffixes(ObservationTable& table, const Word& c) {
  bool grew = false;
  for (const auto& suffix : suffixes(c)) grew = table.add_context(suffix) || grew;
  return grew;
}

} // namespace

std::string_view algorithm_name(Algorithm alg) {
  for (const auto& [a, name] : kNames) {
    if (a == alg) return name;
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

const std::vector<Algorithm>& all_algorithms() {
  static const std::vector<Algorithm> algs{Algorithm::lstar, Algorithm::nlstar, Algorithm::rev2step,
                                           Algorithm::prime2step};
  return algs;
}

LearnerResult lstar_col(Teacher& teacher) {
  ObservationTable table(teacher.alphabet());
  table.fill(teacher);
  std::size_t rounds = 0;
  for (;;) {
    for (;;) {
      if (auto s = is_closed(table)) {
        table.add_red(*s);
        table.fill(teacher);
        continue;
      }
      if (auto e = is_consistent(table)) {
        table.add_context(*e);
        table.fill(teacher);
        continue;
      }
      break;
    }
    Automaton hypothesis = derive_dfa(table);
    ++rounds;
    auto c = teacher.equivalence(hypothesis);
    if (!c) {
      return {std::move(hypothesis), std::move(table), std::nullopt, teacher.stats(), rounds, 0, 0};
    }
    if (!add_counterexample_suffixes(table, *c)) {
      throw LearnerError("lstar_col: counterexample added no new context");
    }
    table.fill(teacher);
  }
}

LearnerResult nlstar(Teacher& teacher, const NlstarOptions& options) {
  ObservationTable table(teacher.alphabet());
  table.fill(teacher);
  std::size_t rounds = 0;
  for (;;) {
    for (std::size_t repairs = 0;; ++repairs) {
      if (repairs > options.max_repairs) throw LearnerError("nlstar: repair limit exceeded");
      if (auto s = is_rfsa_closed(table)) {
        table.add_red(*s);
        table.fill(teacher);
        continue;
      }
      if (auto e = is_rfsa_consistent(table)) {
        table.add_context(*e);
        table.fill(teacher);
        continue;
      }
      break;
    }
    Automaton hypothesis = derive_bollig_nfa(table);
    ++rounds;
    auto c = teacher.equivalence(hypothesis);
    if (!c) {
      return {std::move(hypothesis), std::move(table), std::nullopt, teacher.stats(), rounds, 0, 0};
    }
    if (rounds >= options.max_rounds) throw LearnerError("nlstar: equivalence round limit exceeded");
    if (!add_counterexample_suffixes(table, *c)) {
      throw LearnerError("nlstar: counterexample added no new context");
    }
    table.fill(teacher);
  }
}

LearnerResult two_step_reversal(Teacher& teacher) {
  ReversalTeacher reversed(teacher);
  LearnerResult first = lstar_col(reversed);
  ModifiedTable modified = apply_modifications(first.final_table);
  Automaton hypothesis = derive_reversal_rfsa(modified);
  return {std::move(hypothesis), std::move(first.final_table), std::move(modified), teacher.stats(),
          first.iterations, 0, 0};
}

LearnerResult two_step_prime_contexts(Teacher& teacher) {
  LearnerResult first = lstar_col(teacher);
  const ObservationTable& original = first.final_table;

  // Drop all-zero rows and columns.
  std::vector<Word> rows;
  std::vector<Word> all_rows = original.red();
  for (auto& b : original.blue()) all_rows.push_back(std::move(b));
  for (const auto& s : all_rows) {
    const Bits r = original.row(s);
    if (std::any_of(r.begin(), r.end(), [](bool x) { return x; })) rows.push_back(s);
  }
  std::sort(rows.begin(), rows.end(), ShortLex{});
  std::vector<Word> contexts;
  for (const auto& e : original.contexts()) {
    const Bits col = original.red_column(e);
    if (std::any_of(col.begin(), col.end(), [](bool x) { return x; })) contexts.push_back(e);
  }
  ObservationTable table = original.restricted(rows, contexts);

  // Automaton of the pruned table: its red rows, final by the original ε
  // column, transitions into dropped rows omitted.
  const auto red = table.red();
  ModifiedTable pruned{table, {}};
  for (const auto& s : red) pruned.eps_obs.emplace(s, original.obs(s, Word{}));
  const Automaton dfa = derive_modified_dfa(pruned);

  // For every red row and final state, the shortlex-least word leading
  // from the row's state to that final state.
  std::size_t added = 0;
  for (State from = 0; from < dfa.num_states(); ++from) {
    for (State target : dfa.final_states()) {
      auto e = shortest_path(dfa, from, target);
      if (e && table.add_context(*e)) ++added;
    }
  }
  const std::size_t queries = table.fill(teacher);

  if (auto s = is_rfsa_closed(table)) {
    throw LearnerError("prime2step: table is not RFSA-closed at '" + table.alphabet().format_word(*s) + "'");
  }
  if (auto e = is_rfsa_consistent(table)) {
    throw LearnerError("prime2step: table is not RFSA-consistent at context '" +
                       table.alphabet().format_word(*e) + "'");
  }
  // A zero ε column means no state is final: the target is ∅.
  Automaton hypothesis = table.has_context(Word{}) ? derive_bollig_nfa(table)
                                                   : Automaton(table.alphabet(), 0);
  return {std::move(hypothesis), std::move(table), std::nullopt, teacher.stats(), first.iterations, added, queries};
}

LearnerResult learn(Algorithm alg, Teacher& teacher) {
  switch (alg) {
    case Algorithm::lstar: return lstar_col(teacher);
    case Algorithm::nlstar: return nlstar(teacher);
    case Algorithm::rev2step: return two_step_reversal(teacher);
    case Algorithm::prime2step: return two_step_prime_contexts(teacher);
  }
  throw InputError("unknown algorithm");
}

} // namespace rfsa
