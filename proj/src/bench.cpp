#include "stallings/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "stallings/engine.hpp"
#include "stallings/errors.hpp"

namespace stallings {

namespace {

BenchRow run_cell(GenMode mode, std::size_t n, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  GenProfile profile;
  profile.mode = mode;
  profile.rng_seed = seed;
  const Word w = generate(profile, n);
  VerifyingSink verifier(w);
  EngineOptions opts;
  opts.audit = AuditMode::Sampled;
  const ReductionReport r = reduce(w, &verifier, opts);
  const VerifyReport v = verifier.replayer().report();
  if (!v.end.empty() || v.cost != r.cost) {
    throw std::logic_error("bench: verifier disagrees with the engine at n=" +
                           std::to_string(n) + " seed=" + std::to_string(seed));
  }
  const auto stop = std::chrono::steady_clock::now();
  BenchRow row;
  row.n = n;
  row.seed = seed;
  row.cost = r.cost;
  row.bound = total_cost_bound(n);
  row.max_len = v.max_length;
  row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

}  // namespace

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i] <= 0 || y[i] <= 0) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++k;
  }
  const double denom = static_cast<double>(k) * sxx - sx * sx;
  if (k < 2 || denom == 0.0) return 0.0;
  return (static_cast<double>(k) * sxy - sx * sy) / denom;
}

BenchResult bench(const std::vector<std::size_t>& lengths, std::size_t seeds_per_length,
                  const BenchOptions& opts) {
  if (lengths.empty()) throw BadLength("no lengths given");
  for (std::size_t n : lengths) {
    if (n == 0 || n % 2 != 0) throw BadLength("bench length " + std::to_string(n));
  }
  std::vector<std::pair<std::size_t, std::uint64_t>> cells;
  std::vector<std::size_t> sorted = lengths;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t n : sorted) {
    for (std::uint64_t seed = 0; seed < seeds_per_length; ++seed) cells.emplace_back(n, seed);
  }

  BenchResult result;
  result.rows.resize(cells.size());
  // Largest cells first so the long ones do not trail at the end.
  std::vector<std::size_t> order(cells.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= order.size()) return;
      const std::size_t i = order[k];
      try {
        result.rows[i] = run_cell(opts.mode, cells[i].first, cells[i].second);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(order.size());
        return;
      }
    }
  };
  unsigned jobs = opts.jobs != 0 ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, cells.size()));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  std::map<std::size_t, std::pair<double, std::size_t>> sums;
  for (const BenchRow& row : result.rows) {
    auto& [total, count] = sums[row.n];
    total += static_cast<double>(row.cost);
    ++count;
    if (row.bound > 0) {
      result.worst_ratio = std::max(result.worst_ratio, static_cast<double>(row.cost) /
                                                            static_cast<double>(row.bound));
    }
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [n, sum] : sums) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(sum.first / static_cast<double>(sum.second));
  }
  result.slope = loglog_slope(xs, ys);
  return result;
}

void write_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
  os << "n,seed,cost,bound,max_len,wall_time_ms\n";
  for (const BenchRow& r : rows) {
    os << r.n << ',' << r.seed << ',' << r.cost << ',' << r.bound << ',' << r.max_len << ','
       << r.wall_time_ms << '\n';
  }
}

}  // namespace stallings
