#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rfsa/corpus.hpp"
#include "rfsa/learners.hpp"

namespace rfsa {

struct BenchRecord {
  std::string language;
  std::string alg;
  std::size_t index = 0;  ///< states of the minimal DFA
  std::size_t primes = 0; ///< states of the canonical RFSA
  std::size_t hyp_states = 0;
  std::size_t mq_total = 0;
  std::size_t mq_distinct = 0;
  std::size_t eq = 0;
  std::size_t cex_max = 0;
  bool correct = false;
  double wall_ms = 0.0;
  std::string diagnostic; ///< learner error text when correct is false
};

struct BenchRun {
  BenchRecord record;
  std::optional<LearnerResult> result; ///< empty when the learner threw
};

/// Runs one learner on a fresh teacher session and checks the hypothesis
/// against the target afterwards, outside the query counts.
BenchRun bench_run(const NamedLanguage& language, Algorithm alg);
inline BenchRecord bench_one(const NamedLanguage& language, Algorithm alg) {
  return bench_run(language, alg).record;
}

/// Every (language, algorithm) pair, sorted by (language, alg). `jobs` = 0
/// uses the hardware concurrency; output does not depend on it.
std::vector<BenchRecord> run_bench(const std::vector<NamedLanguage>& corpus,
                                   const std::vector<Algorithm>& algs, std::size_t jobs = 1);

inline constexpr const char* kBenchHeader =
    "language,alg,index,primes,hyp_states,mq_total,mq_distinct,eq,cex_max,correct,wall_ms";

std::string format_bench_row(const BenchRecord& r);
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

} // namespace rfsa
