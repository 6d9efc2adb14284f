// rfsa: command-line front end for the RFSA learning library.
//
//   rfsa canonical <file>
//   rfsa learn --alg <alg> --target <file> [--out <file>] [--stats <csv>]
//   rfsa gen-corpus --n <n> --max-states <m> --alphabet <k> --seed <s> --out <dir>
//   rfsa bench <corpus-dir> [--alg <alg>...] [--out <csv>] [--jobs <j>]
//   rfsa table --alg <alg> --target <file> [--dump]
//
// Exit codes: 0 ok, 2 usage or parse error, 3 I/O error, 4 algorithm
// diagnostic (learner error or incorrect hypothesis).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rfsa/automaton_io.hpp"
#include "rfsa/automaton_ops.hpp"
#include "rfsa/bench.hpp"
#include "rfsa/corpus.hpp"
#include "rfsa/errors.hpp"
#include "rfsa/learners.hpp"
#include "rfsa/residuals.hpp"

namespace fs = std::filesystem;
using namespace rfsa;

namespace {

enum ExitCode : int { kOk = 0, kUsage = 2, kIo = 3, kAlgorithm = 4 };

// Maps library exceptions onto exit codes.
template <typename F>
int guarded(const std::string& context, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    std::cerr << context << ": parse error at " << e.what() << '\n';
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << context << ": " << e.what() << '\n';
    return kIo;
  } catch (const std::ios_base::failure& e) {
    std::cerr << context << ": " << e.what() << '\n';
    return kIo;
  } catch (const InputError& e) {
    std::cerr << context << ": " << e.what() << '\n';
    return kUsage;
  } catch (const LearnerError& e) {
    std::cerr << context << ": " << e.what() << '\n';
    return kAlgorithm;
  } catch (const ContractError& e) {
    std::cerr << context << ": " << e.what() << '\n';
    return kAlgorithm;
  }
}

NamedLanguage load_language(const std::string& path) {
  return {fs::path(path).stem().string(), read_automaton_file(path)};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw fs::filesystem_error("cannot open output file", path,
                               std::make_error_code(std::errc::permission_denied));
  }
  return out;
}

int cmd_canonical(const std::string& input) {
  return guarded("canonical", [&] {
    const Automaton parsed = read_automaton_file(input);
    std::cout << format_automaton(canonical_rfsa(minimize(determinize(parsed).dfa)));
    return kOk;
  });
}

int cmd_learn(const std::string& alg_name, const std::string& target, const std::string& out_path,
              const std::string& stats_path) {
  return guarded("learn", [&] {
    const auto alg = parse_algorithm(alg_name);
    if (!alg) {
      std::cerr << "learn: unknown algorithm '" << alg_name << "'\n";
      return int{kUsage};
    }
    const BenchRun run = bench_run(load_language(target), *alg);
    if (run.result) {
      if (out_path.empty()) {
        std::cout << format_automaton(run.result->hypothesis);
      } else {
        write_automaton_file(run.result->hypothesis, out_path);
      }
    }
    if (!stats_path.empty()) {
      auto out = open_output(stats_path);
      write_bench_csv(out, {run.record});
    }
    if (!run.record.correct) {
      std::cerr << "learn: " << run.record.diagnostic << '\n';
      return int{kAlgorithm};
    }
    return int{kOk};
  });
}

int cmd_gen_corpus(const CorpusOptions& options, const std::string& out_dir) {
  return guarded("gen-corpus", [&] {
    write_corpus(generate_corpus(options), out_dir);
    return kOk;
  });
}

int cmd_bench(const std::string& corpus_dir, const std::vector<std::string>& alg_names,
              const std::string& out_path, std::size_t jobs) {
  return guarded("bench", [&] {
    std::vector<Algorithm> algs;
    for (const auto& n : alg_names) {
      auto a = parse_algorithm(n);
      if (!a) {
        std::cerr << "bench: unknown algorithm '" << n << "'\n";
        return int{kUsage};
      }
      algs.push_back(*a);
    }
    if (algs.empty()) algs = all_algorithms();
    if (!fs::is_directory(corpus_dir)) {
      throw fs::filesystem_error("corpus directory not found", corpus_dir,
                                 std::make_error_code(std::errc::no_such_file_or_directory));
    }
    const auto records = run_bench(read_corpus(corpus_dir), algs, jobs);
    if (out_path.empty()) {
      write_bench_csv(std::cout, records);
    } else {
      auto out = open_output(out_path);
      write_bench_csv(out, records);
    }
    bool all_correct = true;
    for (const auto& r : records) {
      if (r.correct) continue;
      all_correct = false;
      std::cerr << "bench: " << r.language << '/' << r.alg << ": " << r.diagnostic << '\n';
    }
    return int{all_correct ? kOk : kAlgorithm};
  });
}

int cmd_table(const std::string& alg_name, const std::string& target, bool dump) {
  return guarded("table", [&] {
    const auto alg = parse_algorithm(alg_name);
    if (!alg) {
      std::cerr << "table: unknown algorithm '" << alg_name << "'\n";
      return int{kUsage};
    }
    TeacherSession session(read_automaton_file(target));
    const LearnerResult result = learn(*alg, session);
    const ObservationTable& table = result.modified ? result.modified->table : result.final_table;
    if (dump) {
      std::cout << table.dump();
    } else {
      std::cout << "red " << table.red().size() << "\nblue " << table.blue().size() << "\ncontexts "
                << table.contexts().size() << '\n';
    }
    return int{kOk};
  });
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learn residual finite-state automata from observation tables"};
  app.require_subcommand(1);

  std::string input;
  auto* canonical = app.add_subcommand("canonical", "Print the canonical RFSA of an automaton's language");
  canonical->add_option("input", input, "Automaton file")->required();

  std::string alg, target, out, stats;
  auto* learn_cmd = app.add_subcommand("learn", "Learn a target automaton with one algorithm");
  learn_cmd->add_option("--alg", alg, "lstar | nlstar | rev2step | prime2step")->required();
  learn_cmd->add_option("--target", target, "Target automaton file")->required();
  learn_cmd->add_option("--out", out, "Hypothesis output file (default: stdout)");
  learn_cmd->add_option("--stats", stats, "CSV file for the query statistics row");

  CorpusOptions corpus;
  std::string corpus_out;
  auto* gen = app.add_subcommand("gen-corpus", "Write a seeded corpus of random minimal DFAs");
  gen->add_option("--n", corpus.count, "Number of languages")->check(CLI::PositiveNumber);
  gen->add_option("--max-states", corpus.max_states, "States before minimization")->check(CLI::PositiveNumber);
  gen->add_option("--alphabet", corpus.alphabet_size, "Alphabet size")->check(CLI::Range(1, 26));
  gen->add_option("--seed", corpus.seed, "Generator seed");
  gen->add_option("--out", corpus_out, "Output directory")->required();

  std::string corpus_dir, bench_out;
  std::vector<std::string> bench_algs;
  std::size_t jobs = 1;
  auto* bench = app.add_subcommand("bench", "Run learners over a corpus and write a CSV report");
  bench->add_option("corpus", corpus_dir, "Corpus directory")->required();
  bench->add_option("--alg", bench_algs, "Algorithms (default: all)")->delimiter(',');
  bench->add_option("--out", bench_out, "CSV output file (default: stdout)");
  bench->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");

  bool dump = false;
  auto* table = app.add_subcommand("table", "Show the final observation table of a learning run");
  table->add_option("--alg", alg, "lstar | nlstar | rev2step | prime2step")->required();
  table->add_option("--target", target, "Target automaton file")->required();
  table->add_flag("--dump", dump, "Print the full table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (canonical->parsed()) return cmd_canonical(input);
  if (learn_cmd->parsed()) return cmd_learn(alg, target, out, stats);
  if (gen->parsed()) return cmd_gen_corpus(corpus, corpus_out);
  if (bench->parsed()) return cmd_bench(corpus_dir, bench_algs, bench_out, jobs);
  if (table->parsed()) return cmd_table(alg, target, dump);
  return kUsage;
}
