#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rfsa/automaton.hpp"
#include "rfsa/automaton_ops.hpp"
#include "rfsa/corpus.hpp"
#include "rfsa/observation_table.hpp"
#include "rfsa/teacher.hpp"

namespace rfsa::test {

inline Word w(const Alphabet& sigma, const std::string& text) { return sigma.parse_word(text); }

// even number of a's: a toggles, b loops, 0 initial and final
inline Automaton even_a() {
  Automaton a(Alphabet::letters(2), 2);
  a.add_initial(0);
  a.add_final(0);
  a.add_transition(0, 0, 1);
  a.add_transition(1, 0, 0);
  a.add_transition(0, 1, 0);
  a.add_transition(1, 1, 1);
  return a;
}

// words ending in a, as a 2-state NFA
inline Automaton ends_with_a_nfa() {
  Automaton a(Alphabet::letters(2), 2);
  a.add_initial(0);
  a.add_final(1);
  a.add_transition(0, 0, 0);
  a.add_transition(0, 1, 0);
  a.add_transition(0, 0, 1);
  return a;
}

// words ending in a, as a minimal DFA
inline Automaton ends_with_a_dfa() {
  Automaton a(Alphabet::letters(2), 2);
  a.add_initial(0);
  a.add_final(1);
  a.add_transition(0, 0, 1);
  a.add_transition(0, 1, 0);
  a.add_transition(1, 0, 1);
  a.add_transition(1, 1, 0);
  return a;
}

inline Automaton sigma_star(std::size_t k = 2) {
  Automaton a(Alphabet::letters(k), 1);
  a.add_initial(0);
  a.add_final(0);
  for (Symbol s = 0; s < k; ++s) a.add_transition(0, s, 0);
  return a;
}

inline Automaton empty_language(std::size_t k = 2) {
  Automaton a(Alphabet::letters(k), 1);
  a.add_initial(0);
  for (Symbol s = 0; s < k; ++s) a.add_transition(0, s, 0);
  return a;
}

inline Automaton minimal_dfa(const Automaton& a) { return minimize(determinize(a).dfa); }

// All words over k symbols up to the given length, in shortlex order.
inline std::vector<Word> words_up_to(std::size_t k, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol s = 0; s < k; ++s) {
        Word next = out[i];
        next.push_back(s);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

// First word (shortlex, up to max_len) on which the two automata disagree.
inline std::optional<Word> brute_force_difference(const Automaton& a, const Automaton& b,
                                                  std::size_t max_len = 6) {
  for (const auto& word : words_up_to(a.num_symbols(), max_len)) {
    if (accepts(a, word) != accepts(b, word)) return word;
  }
  return std::nullopt;
}

inline Automaton with_initial(const Automaton& a, const StateSet& initial) {
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

inline Automaton permuted(const Automaton& a, const std::vector<State>& perm) {
  Automaton out(a.alphabet(), a.num_states());
  for (State q : a.initial()) out.add_initial(perm[q]);
  for (State q : a.final_states()) out.add_final(perm[q]);
  for (State q = 0; q < a.num_states(); ++q) {
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      for (State t : a.successors(q, s)) out.add_transition(perm[q], s, perm[t]);
    }
  }
  return out;
}

inline Automaton random_nfa(std::size_t n, std::size_t k, std::mt19937_64& rng, double density = 0.3) {
  Automaton a(Alphabet::letters(k), n);
  std::bernoulli_distribution coin(0.5), edge(density);
  a.add_initial(0);
  for (State q = 0; q < n; ++q) {
    if (coin(rng)) a.add_final(q);
    if (q != 0 && edge(rng)) a.add_initial(q);
    for (Symbol s = 0; s < k; ++s) {
      for (State t = 0; t < n; ++t) {
        if (edge(rng)) a.add_transition(q, s, t);
      }
    }
  }
  return a;
}

// Answers membership from a function; equivalence is never called.
class FunctionTeacher final : public Teacher {
public:
  FunctionTeacher(Alphabet alphabet, std::function<bool(const Word&)> fn)
      : alphabet_(std::move(alphabet)), fn_(std::move(fn)) {}
  const Alphabet& alphabet() const override { return alphabet_; }
  bool membership(const Word& word) override {
    ++stats_.mq_total;
    ++stats_.mq_distinct;
    return fn_(word);
  }
  std::optional<Word> equivalence(const Automaton&) override { return std::nullopt; }
  const QueryStats& stats() const override { return stats_; }

private:
  Alphabet alphabet_;
  std::function<bool(const Word&)> fn_;
  QueryStats stats_;
};

using Matrix = std::vector<std::vector<int>>;

// Table over {a,b} with red rows a^i and contexts b^j carrying m[i][j];
// every other word is answered 0.
inline ObservationTable table_from_matrix(const Matrix& m) {
  const Alphabet sigma = Alphabet::letters(2);
  ObservationTable t(sigma);
  Word red;
  for (std::size_t i = 1; i < m.size(); ++i) {
    red.push_back(0);
    t.add_red(red);
  }
  Word ctx;
  for (std::size_t j = 1; j < m.front().size(); ++j) {
    ctx.push_back(1);
    t.add_context(ctx);
  }
  FunctionTeacher teacher(sigma, [m](const Word& word) {
    std::size_t i = 0;
    while (i < word.size() && word[i] == 0) ++i;
    const std::size_t j = word.size() - i;
    for (std::size_t k = i; k < word.size(); ++k) {
      if (word[k] != 1) return false;
    }
    return i < m.size() && j < m[i].size() && m[i][j] == 1;
  });
  t.fill(teacher);
  return t;
}

inline Word a_pow(std::size_t n) { return Word(n, 0); }
inline Word b_pow(std::size_t n) { return Word(n, 1); }

inline const std::vector<NamedLanguage>& seeded_corpus() {
  static const std::vector<NamedLanguage> corpus = generate_corpus(CorpusOptions{});
  return corpus;
}

} // namespace rfsa::test
