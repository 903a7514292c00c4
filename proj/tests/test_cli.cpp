#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "stallings/bench.hpp"
#include "stallings/engine.hpp"
#include "stallings/errors.hpp"
#include "stallings/generate.hpp"

using namespace stallings;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

std::string cli() {
  const char* path = std::getenv("STALLINGS_CLI");
  return path ? path : "stallings";
}

Run run(const std::string& args) {
  const std::string cmd = cli() + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  r.status = pclose(pipe);
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("stallings_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string field(const std::string& text, const std::string& key) {
  const auto at = text.find(key + "=");
  REQUIRE(at != std::string::npos);
  const auto start = at + key.size() + 1;
  return text.substr(start, text.find_first_of(" \n", start) - start);
}

}  // namespace

TEST_CASE("generate examples") {
  GenProfile p;
  CHECK(generate(p, 0).empty());
  CHECK_THROWS_AS(generate(p, 7), BadLength);

  GenProfile one;
  one.num_factors = 1;
  one.max_conjugator_length = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    one.rng_seed = seed;
    const Word w = generate(one, 16);
    bool is_relator = false;
    for (const Word& r : relators()) is_relator |= (w == r || w == r.inverse());
    CHECK(is_relator);
  }
}

TEST_CASE("generated words are reduced identities near the target length") {
  for (int mode = 0; mode < 3; ++mode) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      for (std::size_t n : {4, 10, 32, 64, 130}) {
        GenProfile p;
        p.mode = static_cast<GenMode>(mode);
        p.rng_seed = seed;
        const Word w = generate(p, n);
        CHECK(decide_identity(w));
        CHECK(free_reduce(w) == w);
        CHECK(w.size() <= n);
        CHECK(w.size() + 8 >= n);
        CHECK(generate(p, n) == w);
      }
    }
  }
}

TEST_CASE("nested pinches really nest") {
  GenProfile p;
  p.mode = GenMode::NestedPinches;
  std::size_t deepest = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    p.rng_seed = seed;
    const Word w = generate(p, 256);
    std::int64_t depth = 0;
    for (Letter l : w) {
      if (!l.is_s()) continue;
      depth += l.exponent();
      deepest = std::max<std::size_t>(deepest, static_cast<std::size_t>(std::abs(depth)));
    }
  }
  CHECK(deepest >= 3);
}

TEST_CASE("mode names") {
  for (GenMode m : {GenMode::Conjugates, GenMode::NestedPinches, GenMode::CommutatorHeavy}) {
    CHECK(parse_gen_mode(gen_mode_name(m)) == m);
  }
  CHECK_FALSE(parse_gen_mode("bogus").has_value());
}

TEST_CASE("log-log slope and csv") {
  CHECK(loglog_slope({1, 2, 4, 8}, {3, 12, 48, 192}) == doctest::Approx(2.0));
  CHECK(loglog_slope({10, 100}, {5, 50}) == doctest::Approx(1.0));
  std::ostringstream os;
  write_csv(os, {BenchRow{4, 0, 12, 132448, 30, 0.5}});
  CHECK(os.str() == "n,seed,cost,bound,max_len,wall_time_ms\n4,0,12,132448,30,0.5\n");
}

TEST_CASE("bench in process") {
  const BenchResult r = bench({4}, 1);
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].cost <= 17643 * 16 / 2 - 2174 * 4);
  CHECK_THROWS_AS(bench({}, 1), BadLength);
  CHECK_THROWS_AS(bench({0}, 1), BadLength);
  const BenchResult many = bench({16, 8, 32}, 3);
  REQUIRE(many.rows.size() == 9);
  for (std::size_t i = 0; i + 1 < many.rows.size(); ++i) {
    const auto& a = many.rows[i];
    const auto& b = many.rows[i + 1];
    CHECK((a.n < b.n || (a.n == b.n && a.seed < b.seed)));
  }
  CHECK(many.worst_ratio <= 1.0);
}

TEST_CASE("cli gen and decide") {
  const Run g = run("gen --mode conjugates --n 0 --seed 1");
  CHECK(g.status == 0);
  CHECK(g.out == "\n");

  const Run g2 = run("gen --mode nested_pinches --n 40 --seed 9");
  CHECK(g2.status == 0);
  const std::string word = g2.out.substr(0, g2.out.size() - 1);
  CHECK(run("decide --word " + word).out == "true\n");

  CHECK(run("decide --word ACac").out == "true\n");
  CHECK(run("decide --word AsaS").out == "false\n");
  CHECK(run("decide --word axb").status != 0);
  CHECK(run("gen --mode conjugates --n 7 --seed 1").status != 0);
  CHECK(run("gen --mode nope --n 8 --seed 1").status != 0);
  CHECK(run("").status != 0);
}

TEST_CASE("cli reduce then verify round-trips") {
  const fs::path dir = scratch_dir();
  const Run g = run("gen --mode commutator_heavy --n 48 --seed 4");
  REQUIRE(g.status == 0);
  {
    std::ofstream(dir / "w.txt") << g.out;
  }
  const std::string in = (dir / "w.txt").string();
  const Run r1 = run("reduce --in " + in + " --trace " + (dir / "t1.txt").string());
  REQUIRE(r1.status == 0);
  const Run r2 = run("reduce --in " + in + " --trace " + (dir / "t2.txt").string());
  REQUIRE(r2.status == 0);
  CHECK(slurp(dir / "t1.txt") == slurp(dir / "t2.txt"));

  const Run v = run("verify --trace " + (dir / "t1.txt").string());
  REQUIRE(v.status == 0);
  CHECK(field(v.out, "cost") == field(r1.out, "cost"));
  CHECK(field(v.out, "end") == "-");

  // A damaged trace is rejected.
  std::string text = slurp(dir / "t1.txt");
  const auto at = text.find("\nR ");
  REQUIRE(at != std::string::npos);
  text.replace(at + 1, 1, "F");
  {
    std::ofstream(dir / "bad.txt") << text;
  }
  CHECK(run("verify --trace " + (dir / "bad.txt").string()).status != 0);

  {
    std::ofstream(dir / "nontrivial.txt") << "ab\n";
  }
  CHECK(run("reduce --in " + (dir / "nontrivial.txt").string() + " --trace " +
            (dir / "t3.txt").string())
            .status != 0);
  CHECK(run("verify --trace " + (dir / "missing.txt").string()).status != 0);
  fs::remove_all(dir);
}

TEST_CASE("cli bench writes the csv") {
  const fs::path dir = scratch_dir();
  const fs::path csv = dir / "b.csv";
  const Run b = run("bench --lengths 4 --seeds 1 --csv " + csv.string());
  REQUIRE(b.status == 0);
  std::istringstream lines(slurp(csv));
  std::string header;
  std::string row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "n,seed,cost,bound,max_len,wall_time_ms");
  std::istringstream cells(row);
  std::string n, seed, cost, bound;
  std::getline(cells, n, ',');
  std::getline(cells, seed, ',');
  std::getline(cells, cost, ',');
  std::getline(cells, bound, ',');
  CHECK(n == "4");
  CHECK(std::stoull(cost) <= std::stoull(bound));
  CHECK(std::stoull(bound) == 132448);

  CHECK(run("bench --lengths 5 --seeds 1 --csv " + csv.string()).status != 0);
  CHECK(run("bench --lengths , --seeds 1 --csv " + csv.string()).status != 0);
  fs::remove_all(dir);
}
