#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stallings/bench.hpp"
#include "stallings/engine.hpp"
#include "stallings/errors.hpp"
#include "stallings/generate.hpp"
#include "stallings/rewriting.hpp"

namespace {

using namespace stallings;

std::string shown(const Word& w) { return w.empty() ? "-" : w.str(); }

Word read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string text = line.substr(first, last - first + 1);
    return text == "-" ? Word{} : Word::parse(text);
  }
  return Word{};
}

GenMode mode_from(const std::string& name) {
  const auto mode = parse_gen_mode(name);
  if (!mode) throw std::runtime_error("unknown mode '" + name + "'");
  return *mode;
}

int cmd_gen(const std::string& mode, std::size_t n, std::uint64_t seed) {
  GenProfile profile;
  profile.mode = mode_from(mode);
  profile.rng_seed = seed;
  std::cout << generate(profile, n).str() << '\n';
  return 0;
}

int cmd_reduce(const std::string& in_path, const std::string& trace_path) {
  const Word w = read_word_file(in_path);
  std::ofstream out(trace_path);
  if (!out) throw std::runtime_error("cannot write " + trace_path);
  StreamSink stream(out, w);
  VerifyingSink verifier(w);
  TeeSink tee(stream, verifier);
  const ReductionReport r = reduce(w, &tee);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + trace_path);
  const VerifyReport v = verifier.replayer().report();
  if (!v.end.empty() || v.cost != r.cost) {
    throw std::logic_error("verifier disagrees with the reduction");
  }
  std::cout << "n=" << r.n << " cost=" << r.cost << " bound=" << r.bound
            << " moves=" << r.moves << " max_len=" << r.max_length << '\n';
  return 0;
}

int cmd_verify(const std::string& trace_path) {
  std::ifstream in(trace_path);
  if (!in) throw std::runtime_error("cannot open " + trace_path);
  const VerifyReport v = verify_trace_stream(in);
  std::cout << "ok moves=" << v.moves << " cost=" << v.cost << " max_len=" << v.max_length
            << " end=" << shown(v.end) << '\n';
  return 0;
}

int cmd_decide(const std::string& word) {
  std::cout << (decide_identity(Word::parse(word)) ? "true" : "false") << '\n';
  return 0;
}

int cmd_bench(const std::string& lengths_arg, std::size_t seeds, const std::string& csv_path,
              const std::string& mode, unsigned jobs) {
  std::vector<std::size_t> lengths;
  std::stringstream ss(lengths_arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long long v = std::stoull(item, &used);
    if (used != item.size()) throw std::runtime_error("bad length '" + item + "'");
    lengths.push_back(static_cast<std::size_t>(v));
  }
  BenchOptions opts;
  opts.mode = mode_from(mode);
  opts.jobs = jobs;
  const BenchResult result = bench(lengths, seeds, opts);
  std::ofstream out(csv_path);
  if (!out) throw std::runtime_error("cannot write " + csv_path);
  write_csv(out, result.rows);
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + csv_path);
  std::cout << "rows=" << result.rows.size() << " slope=" << result.slope
            << " worst_ratio=" << result.worst_ratio << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Null-homotopic word reduction in Stallings' group"};
  app.require_subcommand(1);

  std::string mode = "conjugates";
  std::size_t n = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Print a generated null-homotopic word");
  gen->add_option("--mode", mode, "conjugates, nested_pinches or commutator_heavy");
  gen->add_option("--n", n, "Target length (even)")->required();
  gen->add_option("--seed", seed, "RNG seed");

  std::string in_path;
  std::string trace_path;
  auto* red = app.add_subcommand("reduce", "Reduce the word in a file and write its trace");
  red->add_option("--in", in_path, "File holding the word")->required();
  red->add_option("--trace", trace_path, "Trace output file")->required();

  std::string verify_path;
  auto* ver = app.add_subcommand("verify", "Replay a trace file");
  ver->add_option("--trace", verify_path, "Trace file")->required();

  std::string word;
  auto* dec = app.add_subcommand("decide", "Print whether a word represents 1");
  dec->add_option("--word", word, "Word over a-d, s, inverses in uppercase")->required();

  std::string lengths;
  std::size_t seeds = 1;
  std::string csv_path;
  std::string bench_mode = "nested_pinches";
  unsigned jobs = 0;
  auto* ben = app.add_subcommand("bench", "Benchmark sweep with a log-log fit");
  ben->add_option("--lengths", lengths, "Comma-separated even lengths")->required();
  ben->add_option("--seeds", seeds, "Seeds per length")->required();
  ben->add_option("--csv", csv_path, "CSV output file")->required();
  ben->add_option("--mode", bench_mode, "Generator mode");
  ben->add_option("--jobs", jobs, "Worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen) return cmd_gen(mode, n, seed);
    if (*red) return cmd_reduce(in_path, trace_path);
    if (*ver) return cmd_verify(verify_path);
    if (*dec) return cmd_decide(word);
    if (*ben) return cmd_bench(lengths, seeds, csv_path, bench_mode, jobs);
  } catch (const std::exception& e) {
    std::cerr << "stallings: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
