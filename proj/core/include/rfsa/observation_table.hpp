#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rfsa/automaton.hpp"

namespace rfsa {

class Teacher;

/// A row (or column) of observations, one bit per context (or row label).
using Bits = std::vector<bool>;

/// row ⊑ other: every 1 of `row` is a 1 of `other`.
bool bits_included(const Bits& row, const Bits& other);

/// When true, an element is never part of its own covering set. Flipping it
/// makes every row and column trivially self-coverable.
inline constexpr bool kCoverExcludesSelf = true;

/// `target` equals the bitwise OR of the candidates included in it (minus
/// candidates equal to `target` itself under kCoverExcludesSelf).
bool is_covered_by(const Bits& target, const std::vector<Bits>& candidates);

/// Observation table over RED ∪ BLUE × E. Row labels are kept in shortlex
/// order; contexts keep insertion order. Cells start unknown and are
/// filled through a Teacher; a filled cell is never asked again.
class ObservationTable {
public:
  /// RED = {ε}, E = {ε}, BLUE = Σ, all cells unknown.
  explicit ObservationTable(Alphabet alphabet);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::vector<Word> red() const;
  std::vector<Word> blue() const;
  const std::vector<Word>& contexts() const noexcept { return contexts_; }

  bool contains(const Word& s) const { return index_.count(s) != 0; }
  bool is_red(const Word& s) const;
  bool has_context(const Word& e) const;

  /// Moves s into RED and adds its one-symbol extensions to BLUE. s must be
  /// a red word extended by one symbol; returns false if s was already red.
  bool add_red(const Word& s);
  /// Appends e to E; returns false (and changes nothing) if already present.
  bool add_context(const Word& e);
  /// Asks the teacher for every unknown cell; returns the number of queries.
  std::size_t fill(Teacher& teacher);
  std::size_t unknown_cells() const;

  /// obs(s, e); throws InputError if s or e is absent, ContractError if the
  /// cell has not been filled.
  bool obs(const Word& s, const Word& e) const;
  Bits row(const Word& s) const;
  /// Column of e restricted to RED, in red() order.
  Bits red_column(const Word& e) const;

  /// Copy keeping only the given row labels and contexts (in the given
  /// order). The result need not satisfy BLUE = RED·Σ \ RED; this is how
  /// table surgery removes rows.
  ObservationTable restricted(const std::vector<Word>& rows,
                              const std::vector<Word>& contexts) const;

  /// RED prefix-closed and BLUE exactly RED·Σ \ RED.
  bool is_well_formed() const;

  /// Tab-separated dump: header of contexts (ε as ^), RED rows, a `--` line,
  /// BLUE rows.
  std::string dump() const;

private:
  struct Entry {
    bool red = false;
    std::vector<std::int8_t> cells; // -1 unknown, else 0/1
  };
  const Entry& entry(const Word& s) const;
  void add_row(const Word& s);
  std::size_t context_index(const Word& e) const;

  Alphabet alphabet_;
  std::map<Word, Entry, ShortLex> index_;
  std::vector<Word> contexts_;
};

/// A table after the reversal learner's surgery, plus the ε-column values
/// recorded before zero rows and columns were dropped.
struct ModifiedTable {
  ObservationTable table;
  std::map<Word, bool, ShortLex> eps_obs;
};

// Predicates. All take a fully filled table.

bool obviously_different(const ObservationTable& t, const Word& r, const Word& s);
/// Shortlex-least BLUE word differing from every RED word, if any.
std::optional<Word> is_closed(const ObservationTable& t);
/// Context a·e separating two equal RED rows after a, least by (a, e), if any.
std::optional<Word> is_consistent(const ObservationTable& t);

/// row(s1) ⊑ row(s2).
bool row_includes(const ObservationTable& t, const Word& s1, const Word& s2);
bool is_row_coverable(const ObservationTable& t, const Word& s, const std::vector<Word>& candidates);
/// Shortlex-least representative of each distinct non-coverable RED row.
std::vector<Word> ncov_red(const ObservationTable& t);
/// BLUE word whose row is not the join of the ncov(RED) rows below it.
/// Prefers the least such word whose row is also prime among all rows.
std::optional<Word> is_rfsa_closed(const ObservationTable& t);
/// Context a·e with obs(s·a, e) = 0 and obs(s'·a, e) = 1 for some
/// row(s') ⊑ row(s), least by (a, e), if any.
std::optional<Word> is_rfsa_consistent(const ObservationTable& t);
/// col(e) over RED is the OR of the other columns it contains.
bool is_column_coverable(const ObservationTable& t, const Word& e);

// Derivations.

/// Duplicate rows and columns, then zero rows and columns, then coverable
/// columns are removed from a closed and consistent table.
ModifiedTable apply_modifications(const ObservationTable& t);
/// One state per distinct RED row; requires a closed, consistent table with
/// ε ∈ E.
Automaton derive_dfa(const ObservationTable& t);
/// Deterministic automaton on the surviving rows of a modified table;
/// transitions into dropped rows are omitted and finality comes from
/// eps_obs.
Automaton derive_modified_dfa(const ModifiedTable& m);
/// One state per column (the set of RED words marked 1), wired through the
/// reversal of derive_modified_dfa.
Automaton derive_reversal_rfsa(const ModifiedTable& m);
/// NFA on the ncov(RED) rows; requires an RFSA-closed and -consistent table
/// with ε ∈ E. Extensions missing from the table count as all-zero rows.
Automaton derive_bollig_nfa(const ObservationTable& t);

} // namespace rfsa
