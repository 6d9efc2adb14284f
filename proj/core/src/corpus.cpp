#include <algorithm>
#include <fstream>
#include <sstream>

#include "rfsa/automaton_io.hpp"
#include "rfsa/automaton_ops.hpp"
#include "rfsa/corpus.hpp"
#include "rfsa/errors.hpp"

namespace rfsa {

Automaton random_dfa(std::size_t num_states, const Alphabet& alphabet, std::mt19937_64& rng) {
  if (num_states == 0) throw InputError("random_dfa: need at least one state");
  std::uniform_int_distribution<State> target(0, static_cast<State>(num_states - 1));
  std::bernoulli_distribution final_coin(0.5);
  Automaton dfa(alphabet, num_states);
  dfa.add_initial(0);
  for (State q = 0; q < num_states; ++q) {
    if (final_coin(rng)) dfa.add_final(q);
    for (Symbol a = 0; a < alphabet.size(); ++a) dfa.add_transition(q, a, target(rng));
  }
  return dfa;
}

std::vector<NamedLanguage> generate_corpus(const CorpusOptions& options) {
  if (options.count == 0 || options.max_states == 0 || options.alphabet_size == 0) {
    throw InputError("generate_corpus: parameters must be positive");
  }
  const Alphabet alphabet = Alphabet::letters(options.alphabet_size);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size(1, options.max_states);
  std::vector<NamedLanguage> out;
  std::size_t attempts = 0;
  while (out.size() < options.count) {
    if (++attempts > options.count * 10000) {
      throw InputError("generate_corpus: cannot draw a non-trivial language with these parameters");
    }
    Automaton m = minimize(random_dfa(size(rng), alphabet, rng));
    // A one-state minimal DFA accepts ∅ or Σ*.
    if (m.num_states() == 1) continue;
    out.push_back({"lang_" + std::to_string(out.size()), std::move(m)});
  }
  return out;
}

Automaton read_automaton_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::filesystem::filesystem_error("cannot open automaton file", path,
                                            std::make_error_code(std::errc::no_such_file_or_directory));
  }
  return parse_automaton(in);
}

void write_automaton_file(const Automaton& a, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::filesystem::filesystem_error("cannot write automaton file", path,
                                            std::make_error_code(std::errc::permission_denied));
  }
  out << format_automaton(a);
  if (!out) {
    throw std::filesystem::filesystem_error("short write", path, std::make_error_code(std::errc::io_error));
  }
}

void write_corpus(const std::vector<NamedLanguage>& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& lang : corpus) write_automaton_file(lang.target, dir / (lang.name + ".aut"));
}

std::vector<NamedLanguage> read_corpus(const std::filesystem::path& dir) {
  std::vector<NamedLanguage> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".aut") continue;
    out.push_back({entry.path().stem().string(), read_automaton_file(entry.path())});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return out;
}

Automaton nth_from_last_is_a(std::size_t n) {
  if (n == 0) throw InputError("nth_from_last_is_a: n must be positive");
  const Alphabet ab = Alphabet::letters(2);
  Automaton nfa(ab, n + 1);
  nfa.add_initial(0);
  nfa.add_final(static_cast<State>(n));
  nfa.add_transition(0, 0, 0);
  nfa.add_transition(0, 1, 0);
  nfa.add_transition(0, 0, 1);
  for (State q = 1; q < n; ++q) {
    nfa.add_transition(q, 0, q + 1);
    nfa.add_transition(q, 1, q + 1);
  }
  return minimize(determinize(nfa).dfa);
}

} // namespace rfsa
