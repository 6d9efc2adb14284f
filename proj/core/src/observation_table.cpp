#include <algorithm>
#include <sstream>

#include "rfsa/errors.hpp"
#include "rfsa/observation_table.hpp"
#include "rfsa/teacher.hpp"

namespace rfsa {

bool bits_included(const Bits& row, const Bits& other) {
  if (row.size() != other.size()) throw InputError("bits_included: length mismatch");
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] && !other[i]) return false;
  }
  return true;
}

bool is_covered_by(const Bits& target, const std::vector<Bits>& candidates) {
  Bits join(target.size(), false);
  for (const auto& c : candidates) {
    if (kCoverExcludesSelf && c == target) continue;
    if (!bits_included(c, target)) continue;
    for (std::size_t i = 0; i < c.size(); ++i) join[i] = join[i] || c[i];
  }
  return join == target;
}

ObservationTable::ObservationTable(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
  if (alphabet_.empty()) throw InputError("observation table needs a non-empty alphabet");
  contexts_.push_back(Word{});
  add_row(Word{});
  index_.at(Word{}).red = true;
  for (Symbol a = 0; a < alphabet_.size(); ++a) add_row(Word{a});
}

std::vector<Word> ObservationTable::red() const {
  std::vector<Word> out;
  for (const auto& [w, e] : index_) {
    if (e.red) out.push_back(w);
  }
  return out;
}

std::vector<Word> ObservationTable::blue() const {
  std::vector<Word> out;
  for (const auto& [w, e] : index_) {
    if (!e.red) out.push_back(w);
  }
  return out;
}

bool ObservationTable::is_red(const Word& s) const {
  auto it = index_.find(s);
  return it != index_.end() && it->second.red;
}

bool ObservationTable::has_context(const Word& e) const {
  return std::find(contexts_.begin(), contexts_.end(), e) != contexts_.end();
}

const ObservationTable::Entry& ObservationTable::entry(const Word& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) {
    throw InputError("word '" + alphabet_.format_word(s) + "' is not a row of the table");
  }
  return it->second;
}

std::size_t ObservationTable::context_index(const Word& e) const {
  auto it = std::find(contexts_.begin(), contexts_.end(), e);
  if (it == contexts_.end()) {
    throw InputError("word '" + alphabet_.format_word(e) + "' is not a context of the table");
  }
  return static_cast<std::size_t>(it - contexts_.begin());
}

void ObservationTable::add_row(const Word& s) {
  if (!alphabet_.contains(s)) throw InputError("row label has a foreign symbol");
  index_.emplace(s, Entry{false, std::vector<std::int8_t>(contexts_.size(), -1)});
}

bool ObservationTable::add_red(const Word& s) {
  if (is_red(s)) return false;
  if (s.empty() || !is_red(Word(s.begin(), s.end() - 1))) {
    throw ContractError("add_red: '" + alphabet_.format_word(s) +
                        "' does not extend a red word by one symbol");
  }
  if (!contains(s)) add_row(s);
  index_.at(s).red = true;
  for (Symbol a = 0; a < alphabet_.size(); ++a) {
    Word ext = s;
    ext.push_back(a);
    if (!contains(ext)) add_row(ext);
  }
  return true;
}

bool ObservationTable::add_context(const Word& e) {
  if (!alphabet_.contains(e)) throw InputError("context has a foreign symbol");
  if (has_context(e)) return false;
  contexts_.push_back(e);
  for (auto& [w, entry] : index_) entry.cells.push_back(-1);
  return true;
}

std::size_t ObservationTable::fill(Teacher& teacher) {
  std::size_t queries = 0;
  for (auto& [s, entry] : index_) {
    for (std::size_t j = 0; j < contexts_.size(); ++j) {
      if (entry.cells[j] >= 0) continue;
      entry.cells[j] = teacher.membership(concat(s, contexts_[j])) ? 1 : 0;
      ++queries;
    }
  }
  return queries;
}

std::size_t ObservationTable::unknown_cells() const {
  std::size_t n = 0;
  for (const auto& [s, entry] : index_) {
    n += static_cast<std::size_t>(std::count(entry.cells.begin(), entry.cells.end(), -1));
  }
  return n;
}

bool ObservationTable::obs(const Word& s, const Word& e) const {
  const auto& cell = entry(s).cells[context_index(e)];
  if (cell < 0) throw ContractError("obs: cell has not been filled");
  return cell == 1;
}

Bits ObservationTable::row(const Word& s) const {
  const auto& cells = entry(s).cells;
  Bits out(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    if (cells[j] < 0) throw ContractError("row: table has unfilled cells");
    out[j] = cells[j] == 1;
  }
  return out;
}

Bits ObservationTable::red_column(const Word& e) const {
  const std::size_t j = context_index(e);
  Bits out;
  for (const auto& [s, entry] : index_) {
    if (!entry.red) continue;
    if (entry.cells[j] < 0) throw ContractError("red_column: table has unfilled cells");
    out.push_back(entry.cells[j] == 1);
  }
  return out;
}

ObservationTable ObservationTable::restricted(const std::vector<Word>& rows,
                                              const std::vector<Word>& contexts) const {
  std::vector<std::size_t> columns;
  for (const auto& e : contexts) columns.push_back(context_index(e));
  ObservationTable out(alphabet_);
  out.index_.clear();
  out.contexts_ = contexts;
  for (const auto& s : rows) {
    const Entry& src = entry(s);
    Entry copy{src.red, {}};
    for (std::size_t j : columns) copy.cells.push_back(src.cells[j]);
    out.index_.emplace(s, std::move(copy));
  }
  return out;
}

bool ObservationTable::is_well_formed() const {
  for (const auto& [s, entry] : index_) {
    if (!entry.red) continue;
    if (!s.empty() && !is_red(Word(s.begin(), s.end() - 1))) return false;
  }
  std::vector<Word> expected;
  for (const auto& [s, entry] : index_) {
    if (!entry.red) continue;
    for (Symbol a = 0; a < alphabet_.size(); ++a) {
      Word ext = s;
      ext.push_back(a);
      if (!is_red(ext)) expected.push_back(ext);
    }
  }
  std::sort(expected.begin(), expected.end(), ShortLex{});
  return expected == blue();
}

std::string ObservationTable::dump() const {
  std::ostringstream out;
  for (const auto& e : contexts_) out << '\t' << alphabet_.format_word(e);
  out << '\n';
  auto print_rows = [&](bool red) {
    for (const auto& [s, entry] : index_) {
      if (entry.red != red) continue;
      out << alphabet_.format_word(s);
      for (auto c : entry.cells) out << '\t' << (c < 0 ? "?" : c == 1 ? "1" : "0");
      out << '\n';
    }
  };
  print_rows(true);
  out << "--\n";
  print_rows(false);
  return out.str();
}

} // namespace rfsa
