#include <algorithm>

#include "rfsa/errors.hpp"
#include "rfsa/word.hpp"

namespace rfsa {

Word reverse_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(const Word& lhs, const Word& rhs) {
  Word out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

std::vector<Word> suffixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t start = w.size() + 1; start-- > 0;) {
    out.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  }
  return out;
}

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end()) {
    throw InputError("alphabet contains a duplicate symbol");
  }
  for (const auto& n : names_) {
    if (n.empty() || n == "^" || n.find_first_of(" \t\r\n#") != std::string::npos) {
      throw InputError("invalid symbol name '" + n + "'");
    }
    if (n.size() != 1) single_char_ = false;
  }
}

Alphabet Alphabet::letters(std::size_t size) {
  if (size == 0 || size > 26) throw InputError("letter alphabet size must be in 1..26");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

const std::string& Alphabet::name(Symbol s) const {
  if (s >= names_.size()) throw InputError("symbol index out of range");
  return names_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Symbol>(it - names_.begin());
}

bool Alphabet::contains(const Word& w) const {
  return std::all_of(w.begin(), w.end(), [&](Symbol s) { return s < names_.size(); });
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  if (text.empty() || text == "^") return w;
  if (single_char_) {
    for (char c : text) {
      auto s = find(std::string_view(&c, 1));
      if (!s) throw InputError("symbol '" + std::string(1, c) + "' not in alphabet");
      w.push_back(*s);
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    auto tok = text.substr(pos, end - pos);
    if (!tok.empty()) {
      auto s = find(tok);
      if (!s) throw InputError("symbol '" + std::string(tok) + "' not in alphabet");
      w.push_back(*s);
    }
    pos = end + 1;
  }
  return w;
}

std::string Alphabet::format_word(const Word& w) const {
  if (w.empty()) return "^";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) out += ' ';
    out += name(w[i]);
  }
  return out;
}

} // namespace rfsa
