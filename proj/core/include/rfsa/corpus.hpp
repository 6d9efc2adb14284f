#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "rfsa/automaton.hpp"

namespace rfsa {

struct NamedLanguage {
  std::string name;
  Automaton target;
};

struct CorpusOptions {
  std::size_t count = 200;
  std::size_t max_states = 8;
  std::size_t alphabet_size = 2;
  std::uint64_t seed = 42;
};

/// Total DFA with uniformly drawn transitions, each state final with
/// probability 1/2, state 0 initial.
Automaton random_dfa(std::size_t num_states, const Alphabet& alphabet, std::mt19937_64& rng);

/// `count` minimized random DFAs named lang_<k>. State counts are drawn
/// uniformly from 1..max_states before minimization; languages equal to ∅ or
/// Σ* are redrawn. Deterministic in the seed.
std::vector<NamedLanguage> generate_corpus(const CorpusOptions& options);

/// Writes <dir>/<name>.aut for every language. Throws std::filesystem_error
/// or std::ios_base::failure on I/O problems.
void write_corpus(const std::vector<NamedLanguage>& corpus, const std::filesystem::path& dir);
/// Reads every *.aut file of a directory, sorted by name.
std::vector<NamedLanguage> read_corpus(const std::filesystem::path& dir);

Automaton read_automaton_file(const std::filesystem::path& path);
void write_automaton_file(const Automaton& a, const std::filesystem::path& path);

/// Minimal DFA of "the n-th symbol from the end is a" over {a, b}.
Automaton nth_from_last_is_a(std::size_t n);

} // namespace rfsa
