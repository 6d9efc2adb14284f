#include <benchmark/benchmark.h>

#include "rfsa/automaton_ops.hpp"
#include "rfsa/corpus.hpp"
#include "rfsa/learners.hpp"
#include "rfsa/residuals.hpp"

namespace {

const std::vector<rfsa::NamedLanguage>& corpus() {
  static const auto c = rfsa::generate_corpus(rfsa::CorpusOptions{});
  return c;
}

// One iteration learns every corpus language; counters report query totals.
void learn_corpus(benchmark::State& state, rfsa::Algorithm alg) {
  std::size_t mq = 0, eq = 0, failures = 0;
  for (auto _ : state) {
    mq = eq = failures = 0;
    for (const auto& lang : corpus()) {
      rfsa::TeacherSession session(lang.target);
      try {
        benchmark::DoNotOptimize(rfsa::learn(alg, session));
      } catch (const std::exception&) {
        ++failures;
      }
      mq += session.stats().mq_distinct;
      eq += session.stats().eq_count;
    }
  }
  state.counters["mq_distinct"] = static_cast<double>(mq);
  state.counters["eq"] = static_cast<double>(eq);
  state.counters["diagnostics"] = static_cast<double>(failures);
}

void canonical_rfsa_corpus(benchmark::State& state) {
  for (auto _ : state) {
    for (const auto& lang : corpus()) benchmark::DoNotOptimize(rfsa::canonical_rfsa(lang.target));
  }
}

void reversal_witness(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const rfsa::Automaton dfa = rfsa::nth_from_last_is_a(n);
  const rfsa::Automaton rev = rfsa::reverse_automaton(dfa);
  for (auto _ : state) benchmark::DoNotOptimize(rfsa::shortest_difference_witness(rev, rev));
}

} // namespace

BENCHMARK_CAPTURE(learn_corpus, lstar, rfsa::Algorithm::lstar)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(learn_corpus, nlstar, rfsa::Algorithm::nlstar)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(learn_corpus, rev2step, rfsa::Algorithm::rev2step)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(learn_corpus, prime2step, rfsa::Algorithm::prime2step)->Unit(benchmark::kMillisecond);
BENCHMARK(canonical_rfsa_corpus)->Unit(benchmark::kMillisecond);
BENCHMARK(reversal_witness)->DenseRange(2, 8, 2);
BENCHMARK_MAIN();
