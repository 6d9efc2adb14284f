#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rfsa {

/// Index into an Alphabet. Symbol order is the alphabet's sorted order.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Length-lexicographic ("shortlex") order: shorter words first, ties broken
/// by symbol order.
struct ShortLex {
  bool operator()(const Word& lhs, const Word& rhs) const {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
  }
};

Word reverse_word(const Word& w);
Word concat(const Word& lhs, const Word& rhs);

/// All suffixes of w, including w itself and the empty word, shortest first.
std::vector<Word> suffixes(const Word& w);

/// Ordered finite set of named symbols. Names are kept sorted so that equal
/// alphabets compare equal regardless of declaration order.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  /// Alphabet {a, b, c, ...} with `size` single-letter symbols.
  static Alphabet letters(std::size_t size);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(Symbol s) const;
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Symbol> find(std::string_view name) const;
  bool contains(const Word& w) const;

  /// Parses a word written as concatenated single-character symbols
  /// ("aba"), or space-separated names when any symbol is longer than one
  /// character. The empty string and "^" both denote the empty word.
  Word parse_word(std::string_view text) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  bool single_char_ = true;
  std::vector<std::string> names_;
};

} // namespace rfsa
