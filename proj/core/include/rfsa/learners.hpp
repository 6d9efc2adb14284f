#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rfsa/automaton.hpp"
#include "rfsa/observation_table.hpp"
#include "rfsa/teacher.hpp"

namespace rfsa {

enum class Algorithm { lstar, nlstar, rev2step, prime2step };

std::string_view algorithm_name(Algorithm alg);
std::optional<Algorithm> parse_algorithm(std::string_view name);
const std::vector<Algorithm>& all_algorithms();

struct LearnerResult {
  Automaton hypothesis;
  /// Last table the learner queried through the teacher. For the reversal
  /// learner this is the table for the reversed language, before surgery.
  ObservationTable final_table;
  /// Table after the reversal learner's surgery.
  std::optional<ModifiedTable> modified;
  QueryStats stats;
  /// Equivalence-query rounds.
  std::size_t iterations = 0;
  /// Contexts and membership queries spent by the prime-context surgery.
  std::size_t surgery_contexts = 0;
  std::size_t surgery_queries = 0;
};

struct NlstarOptions {
  /// Equivalence rounds before the learner gives up with a LearnerError.
  std::size_t max_rounds = 4096;
  /// Closedness/consistency repairs per round before giving up.
  std::size_t max_repairs = 1 << 16;
};

/// Angluin-style learner adding every counterexample suffix to E. Returns
/// the DFA derived from the final closed and consistent table.
LearnerResult lstar_col(Teacher& teacher);

/// NL*: like lstar_col under RFSA-closedness and RFSA-consistency, deriving
/// an NFA from the non-coverable red rows.
LearnerResult nlstar(Teacher& teacher, const NlstarOptions& options = {});

/// Learns the minimal DFA of the reversed language with lstar_col, prunes
/// duplicate, zero and coverable columns from its table and reads the
/// canonical RFSA off the remaining columns. The surgery issues no queries.
LearnerResult two_step_reversal(Teacher& teacher);

/// Learns the minimal DFA with lstar_col, drops all-zero rows and columns,
/// then adds for every red row and final state the shortest context leading
/// there, fills the table and derives the NFA from the non-coverable rows.
/// Issues no equivalence queries beyond the lstar_col run.
LearnerResult two_step_prime_contexts(Teacher& teacher);

LearnerResult learn(Algorithm alg, Teacher& teacher);

} // namespace rfsa
