#include <algorithm>

#include "rfsa/automaton_ops.hpp"
#include "rfsa/errors.hpp"
#include "rfsa/observation_table.hpp"

namespace rfsa {

namespace {

Word extend(const Word& s, Symbol a) {
  Word out = s;
  out.push_back(a);
  return out;
}

// Row of s, or the all-zero row when s has been cut from the table.
Bits row_or_zero(const ObservationTable& t, const Word& s) {
  if (t.contains(s)) return t.row(s);
  return Bits(t.contexts().size(), false);
}

// OR of the candidates included in target, with no self-exclusion.
bool is_join_of_included(const Bits& target, const std::vector<Bits>& candidates) {
  Bits join(target.size(), false);
  for (const auto& c : candidates) {
    if (!bits_included(c, target)) continue;
    for (std::size_t i = 0; i < c.size(); ++i) join[i] = join[i] || c[i];
  }
  return join == target;
}

// Shortlex-least representative per distinct row, in shortlex order.
std::vector<Word> distinct_representatives(const ObservationTable& t, const std::vector<Word>& words) {
  std::vector<Word> reps;
  std::vector<Bits> seen;
  for (const auto& w : words) {
    Bits r = t.row(w);
    if (std::find(seen.begin(), seen.end(), r) == seen.end()) {
      seen.push_back(std::move(r));
      reps.push_back(w);
    }
  }
  return reps;
}

// (a, e) ordering: symbol first, then shortlex on e.
struct ContextCandidate {
  Symbol a;
  Word e;
  bool operator<(const ContextCandidate& o) const {
    if (a != o.a) return a < o.a;
    return ShortLex{}(e, o.e);
  }
};

std::optional<Word> to_context(const std::optional<ContextCandidate>& c) {
  if (!c) return std::nullopt;
  Word w{c->a};
  w.insert(w.end(), c->e.begin(), c->e.end());
  return w;
}

void require_epsilon_context(const ObservationTable& t, const char* who) {
  if (!t.has_context(Word{})) throw ContractError(std::string(who) + ": ε is not a context");
}

} // namespace

bool obviously_different(const ObservationTable& t, const Word& r, const Word& s) {
  return t.row(r) != t.row(s);
}

std::optional<Word> is_closed(const ObservationTable& t) {
  std::vector<Bits> red_rows;
  for (const auto& r : t.red()) red_rows.push_back(t.row(r));
  for (const auto& s : t.blue()) {
    if (std::find(red_rows.begin(), red_rows.end(), t.row(s)) == red_rows.end()) return s;
  }
  return std::nullopt;
}

std::optional<Word> is_consistent(const ObservationTable& t) {
  const auto red = t.red();
  const auto& contexts = t.contexts();
  std::optional<ContextCandidate> best;
  for (std::size_t i = 0; i < red.size(); ++i) {
    for (std::size_t j = i + 1; j < red.size(); ++j) {
      if (obviously_different(t, red[i], red[j])) continue;
      for (Symbol a = 0; a < t.alphabet().size(); ++a) {
        const Word x = extend(red[i], a);
        const Word y = extend(red[j], a);
        if (!t.contains(x) || !t.contains(y)) continue;
        const Bits rx = t.row(x);
        const Bits ry = t.row(y);
        for (std::size_t k = 0; k < contexts.size(); ++k) {
          if (rx[k] == ry[k]) continue;
          ContextCandidate c{a, contexts[k]};
          if (!best || c < *best) best = c;
        }
      }
    }
  }
  return to_context(best);
}

bool row_includes(const ObservationTable& t, const Word& s1, const Word& s2) {
  return bits_included(t.row(s1), t.row(s2));
}

bool is_row_coverable(const ObservationTable& t, const Word& s, const std::vector<Word>& candidates) {
  std::vector<Bits> rows;
  for (const auto& c : candidates) rows.push_back(t.row(c));
  return is_covered_by(t.row(s), rows);
}

std::vector<Word> ncov_red(const ObservationTable& t) {
  const auto reps = distinct_representatives(t, t.red());
  std::vector<Word> out;
  for (const auto& s : reps) {
    if (!is_row_coverable(t, s, reps)) out.push_back(s);
  }
  return out;
}

std::optional<Word> is_rfsa_closed(const ObservationTable& t) {
  std::vector<Bits> primes;
  for (const auto& s : ncov_red(t)) primes.push_back(t.row(s));

  std::vector<Bits> all_rows;
  for (const auto& s : distinct_representatives(t, t.blue())) all_rows.push_back(t.row(s));
  for (const auto& s : distinct_representatives(t, t.red())) all_rows.push_back(t.row(s));

  std::optional<Word> first_violation;
  for (const auto& s : t.blue()) {
    const Bits r = t.row(s);
    if (is_join_of_included(r, primes)) continue;
    if (!first_violation) first_violation = s;
    // Prefer a blue row that is itself prime among all rows.
    if (!is_covered_by(r, all_rows)) return s;
  }
  return first_violation;
}

std::optional<Word> is_rfsa_consistent(const ObservationTable& t) {
  const auto red = t.red();
  const auto& contexts = t.contexts();
  std::optional<ContextCandidate> best;
  for (const auto& s : red) {
    const Bits rs = t.row(s);
    for (const auto& s_prime : red) {
      if (!bits_included(t.row(s_prime), rs)) continue;
      for (Symbol a = 0; a < t.alphabet().size(); ++a) {
        const Bits big = row_or_zero(t, extend(s, a));
        const Bits small = row_or_zero(t, extend(s_prime, a));
        for (std::size_t k = 0; k < contexts.size(); ++k) {
          if (small[k] && !big[k]) {
            ContextCandidate c{a, contexts[k]};
            if (!best || c < *best) best = c;
          }
        }
      }
    }
  }
  return to_context(best);
}

bool is_column_coverable(const ObservationTable& t, const Word& e) {
  const Bits col = t.red_column(e);
  std::vector<Bits> others;
  for (const auto& f : t.contexts()) {
    if (f != e) others.push_back(t.red_column(f));
  }
  return is_covered_by(col, others);
}

ModifiedTable apply_modifications(const ObservationTable& t) {
  if (t.unknown_cells() != 0) throw ContractError("apply_modifications: table has unfilled cells");
  if (is_closed(t) || is_consistent(t)) {
    throw ContractError("apply_modifications: table is not closed and consistent");
  }
  require_epsilon_context(t, "apply_modifications");

  // (1) one representative per distinct red row and per distinct column.
  const auto red_reps = distinct_representatives(t, t.red());
  std::vector<Word> contexts = t.contexts();
  std::sort(contexts.begin(), contexts.end(), ShortLex{});
  std::vector<Word> column_reps;
  std::vector<Bits> seen_columns;
  for (const auto& e : contexts) {
    Bits col = t.red_column(e);
    if (std::find(seen_columns.begin(), seen_columns.end(), col) == seen_columns.end()) {
      seen_columns.push_back(std::move(col));
      column_reps.push_back(e);
    }
  }

  std::map<Word, bool, ShortLex> eps_obs;
  for (const auto& s : red_reps) eps_obs.emplace(s, t.obs(s, Word{}));

  // (2) drop all-zero rows and columns.
  auto nonzero_over = [&](const Word& s, const std::vector<Word>& cols) {
    return std::any_of(cols.begin(), cols.end(), [&](const Word& e) { return t.obs(s, e); });
  };
  std::vector<Word> red_kept;
  for (const auto& s : red_reps) {
    if (nonzero_over(s, column_reps)) red_kept.push_back(s);
  }
  std::vector<Word> nonzero_columns;
  for (const auto& e : column_reps) {
    bool any = std::any_of(red_kept.begin(), red_kept.end(), [&](const Word& s) { return t.obs(s, e); });
    if (any) nonzero_columns.push_back(e);
  }

  // (3) drop every column covered by the remaining ones, simultaneously.
  const ObservationTable stage = t.restricted(red_kept, nonzero_columns);
  std::vector<Word> columns_kept;
  for (const auto& e : nonzero_columns) {
    if (!is_column_coverable(stage, e)) columns_kept.push_back(e);
  }

  std::vector<Word> rows = red_kept;
  for (const auto& s : red_kept) {
    for (Symbol a = 0; a < t.alphabet().size(); ++a) {
      Word ext = extend(s, a);
      if (!t.contains(ext) || t.is_red(ext)) continue;
      if (nonzero_over(ext, columns_kept)) rows.push_back(std::move(ext));
    }
  }
  std::sort(rows.begin(), rows.end(), ShortLex{});
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  for (auto it = eps_obs.begin(); it != eps_obs.end();) {
    if (std::find(red_kept.begin(), red_kept.end(), it->first) == red_kept.end()) {
      it = eps_obs.erase(it);
    } else {
      ++it;
    }
  }
  return {t.restricted(rows, columns_kept), std::move(eps_obs)};
}

Automaton derive_dfa(const ObservationTable& t) {
  require_epsilon_context(t, "derive_dfa");
  if (t.unknown_cells() != 0) throw ContractError("derive_dfa: table has unfilled cells");
  if (is_closed(t) || is_consistent(t)) throw ContractError("derive_dfa: table is not closed and consistent");

  const auto reps = distinct_representatives(t, t.red());
  std::vector<Bits> rows;
  for (const auto& s : reps) rows.push_back(t.row(s));
  auto state_of = [&](const Word& s) {
    auto it = std::find(rows.begin(), rows.end(), t.row(s));
    return static_cast<State>(it - rows.begin());
  };

  Automaton out(t.alphabet(), reps.size());
  out.add_initial(state_of(Word{}));
  for (State i = 0; i < reps.size(); ++i) {
    if (t.obs(reps[i], Word{})) out.add_final(i);
    for (Symbol a = 0; a < t.alphabet().size(); ++a) out.add_transition(i, a, state_of(extend(reps[i], a)));
  }
  return out;
}

Automaton derive_modified_dfa(const ModifiedTable& m) {
  const ObservationTable& t = m.table;
  const auto red = t.red();
  std::vector<Bits> rows;
  for (const auto& s : red) rows.push_back(t.row(s));

  Automaton out(t.alphabet(), red.size());
  for (State i = 0; i < red.size(); ++i) {
    if (red[i].empty()) out.add_initial(i);
    auto eps = m.eps_obs.find(red[i]);
    if (eps == m.eps_obs.end()) throw ContractError("derive_modified_dfa: missing ε observation");
    if (eps->second) out.add_final(i);
    for (Symbol a = 0; a < t.alphabet().size(); ++a) {
      const Word ext = extend(red[i], a);
      if (!t.contains(ext)) continue;
      const Bits r = t.row(ext);
      if (std::count(rows.begin(), rows.end(), r) != 1) {
        throw ContractError("derive_modified_dfa: successor row does not match exactly one state");
      }
      out.add_transition(i, a, static_cast<State>(std::find(rows.begin(), rows.end(), r) - rows.begin()));
    }
  }
  return out;
}

Automaton derive_reversal_rfsa(const ModifiedTable& m) {
  const ObservationTable& t = m.table;
  const Automaton dfa = derive_modified_dfa(m);
  const auto red = t.red();

  std::vector<StateSet> columns;
  for (const auto& e : t.contexts()) {
    const Bits col = t.red_column(e);
    StateSet q;
    for (State i = 0; i < col.size(); ++i) {
      if (col[i]) q.push_back(i);
    }
    columns.push_back(std::move(q));
  }

  Automaton out(t.alphabet(), columns.size());
  for (State c = 0; c < columns.size(); ++c) {
    const StateSet& q = columns[c];
    if (std::all_of(q.begin(), q.end(), [&](State i) { return m.eps_obs.at(red[i]); })) out.add_initial(c);
    if (std::any_of(q.begin(), q.end(), [&](State i) { return red[i].empty(); })) out.add_final(c);
    for (Symbol a = 0; a < t.alphabet().size(); ++a) {
      // Reverse step of the derived DFA: every state whose a-successor is in q.
      StateSet back;
      for (State i = 0; i < dfa.num_states(); ++i) {
        const auto& succ = dfa.successors(i, a);
        if (!succ.empty() && contains_sorted(q, succ.front())) back.push_back(i);
      }
      for (State d = 0; d < columns.size(); ++d) {
        if (is_subset(columns[d], back)) out.add_transition(c, a, d);
      }
    }
  }
  return out;
}

Automaton derive_bollig_nfa(const ObservationTable& t) {
  require_epsilon_context(t, "derive_bollig_nfa");
  if (t.unknown_cells() != 0) throw ContractError("derive_bollig_nfa: table has unfilled cells");
  if (is_rfsa_closed(t) || is_rfsa_consistent(t)) {
    throw ContractError("derive_bollig_nfa: table is not RFSA-closed and RFSA-consistent");
  }
  const auto primes = ncov_red(t);
  const auto red = t.red();
  std::vector<Bits> prime_rows;
  for (const auto& s : primes) prime_rows.push_back(t.row(s));
  const Bits start = row_or_zero(t, Word{});

  Automaton out(t.alphabet(), primes.size());
  for (State i = 0; i < primes.size(); ++i) {
    if (bits_included(prime_rows[i], start)) out.add_initial(i);
    const bool final = std::all_of(red.begin(), red.end(), [&](const Word& s) {
      return t.row(s) != prime_rows[i] || t.obs(s, Word{});
    });
    if (final) out.add_final(i);
    for (Symbol a = 0; a < t.alphabet().size(); ++a) {
      const Bits succ = row_or_zero(t, extend(primes[i], a));
      for (State j = 0; j < primes.size(); ++j) {
        if (bits_included(prime_rows[j], succ)) out.add_transition(i, a, j);
      }
    }
  }
  return out;
}

} // namespace rfsa
