#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <thread>

#include "rfsa/automaton_ops.hpp"
#include "rfsa/bench.hpp"
#include "rfsa/residuals.hpp"

namespace rfsa {

BenchRun bench_run(const NamedLanguage& language, Algorithm alg) {
  BenchRun run;
  BenchRecord& r = run.record;
  r.language = language.name;
  r.alg = std::string(algorithm_name(alg));
  const Automaton minimal = minimize(determinize(language.target).dfa);
  r.index = minimal.num_states();
  r.primes = canonical_rfsa(minimal).num_states();

  TeacherSession session(language.target);
  const auto start = std::chrono::steady_clock::now();
  try {
    run.result = learn(alg, session);
    r.hyp_states = run.result->hypothesis.num_states();
    r.correct = equivalent(run.result->hypothesis, language.target);
    if (!r.correct) r.diagnostic = "hypothesis differs from target";
  } catch (const std::exception& e) {
    r.correct = false;
    r.diagnostic = e.what();
  }
  const auto stop = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  const QueryStats& s = session.stats();
  r.mq_total = s.mq_total;
  r.mq_distinct = s.mq_distinct;
  r.eq = s.eq_count;
  r.cex_max = s.longest_counterexample;
  return run;
}

std::vector<BenchRecord> run_bench(const std::vector<NamedLanguage>& corpus,
                                   const std::vector<Algorithm>& algs, std::size_t jobs) {
  std::vector<std::pair<const NamedLanguage*, Algorithm>> work;
  for (const auto& lang : corpus) {
    for (Algorithm a : algs) work.emplace_back(&lang, a);
  }
  std::vector<BenchRecord> records(work.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(work.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      records[i] = bench_one(*work[i].first, work[i].second);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& x, const BenchRecord& y) {
    return std::tie(x.language, x.alg) < std::tie(y.language, y.alg);
  });
  return records;
}

std::string format_bench_row(const BenchRecord& r) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
  return r.language + ',' + r.alg + ',' + std::to_string(r.index) + ',' + std::to_string(r.primes) + ',' +
         std::to_string(r.hyp_states) + ',' + std::to_string(r.mq_total) + ',' +
         std::to_string(r.mq_distinct) + ',' + std::to_string(r.eq) + ',' + std::to_string(r.cex_max) + ',' +
         (r.correct ? "1" : "0") + ',' + ms;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchHeader << '\n';
  for (const auto& r : records) out << format_bench_row(r) << '\n';
}

} // namespace rfsa
