#include <charconv>
#include <istream>
#include <optional>
#include <sstream>

#include "rfsa/automaton_io.hpp"
#include "rfsa/errors.hpp"

namespace rfsa {

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

State parse_id(const std::string& tok, std::size_t num_states, std::size_t line) {
  State v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a state id, got '" + tok + "'");
  }
  if (v >= num_states) throw ParseError(line, "state id " + tok + " out of range");
  return v;
}

} // namespace

Automaton parse_automaton(std::istream& in) {
  std::optional<Alphabet> alphabet;
  std::optional<Automaton> aut;
  bool seen_initial = false;
  bool seen_final = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    auto colon = raw.find(':');
    if (colon == std::string::npos) throw ParseError(line, "missing ':'");
    const std::string key = raw.substr(first, colon - first);
    const auto args = split(raw.substr(colon + 1));

    if (key == "alphabet") {
      if (alphabet) throw ParseError(line, "duplicate 'alphabet:' line");
      if (args.empty()) throw ParseError(line, "empty alphabet");
      try {
        alphabet = Alphabet(args);
      } catch (const InputError& e) {
        throw ParseError(line, e.what());
      }
    } else if (key == "states") {
      if (aut) throw ParseError(line, "duplicate 'states:' line");
      if (!alphabet) throw ParseError(line, "'states:' before 'alphabet:'");
      if (args.size() != 1) throw ParseError(line, "'states:' takes one count");
      std::size_t n = 0;
      const auto& tok = args[0];
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "invalid state count '" + tok + "'");
      }
      aut.emplace(*alphabet, n);
    } else if (key == "initial" || key == "final") {
      if (!aut) throw ParseError(line, "'" + key + ":' before 'states:'");
      bool& seen = key == "initial" ? seen_initial : seen_final;
      if (seen) throw ParseError(line, "duplicate '" + key + ":' line");
      seen = true;
      for (const auto& tok : args) {
        State q = parse_id(tok, aut->num_states(), line);
        if (key == "initial") aut->add_initial(q); else aut->add_final(q);
      }
    } else if (key == "trans") {
      if (!aut) throw ParseError(line, "'trans:' before 'states:'");
      if (args.size() != 3) throw ParseError(line, "'trans:' takes <from> <symbol> <to>");
      State from = parse_id(args[0], aut->num_states(), line);
      auto sym = alphabet->find(args[1]);
      if (!sym) throw ParseError(line, "symbol '" + args[1] + "' not in alphabet");
      State to = parse_id(args[2], aut->num_states(), line);
      aut->add_transition(from, *sym, to);
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  if (!alphabet) throw ParseError(line, "missing 'alphabet:' line");
  if (!aut) throw ParseError(line, "missing 'states:' line");
  return std::move(*aut);
}

Automaton parse_automaton(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_automaton(in);
}

std::string format_automaton(const Automaton& a) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& n : a.alphabet().names()) out << ' ' << n;
  out << "\nstates: " << a.num_states() << "\ninitial:";
  for (State q : a.initial()) out << ' ' << q;
  out << "\nfinal:";
  for (State q : a.final_states()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < a.num_states(); ++q) {
    for (Symbol s = 0; s < a.num_symbols(); ++s) {
      for (State t : a.successors(q, s)) {
        out << "trans: " << q << ' ' << a.alphabet().name(s) << ' ' << t << '\n';
      }
    }
  }
  return out.str();
}

} // namespace rfsa
