#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "grundy.hpp"
#include "random.hpp"

namespace lctr {

struct BenchRow {
  Engine engine;
  Shape shape;
  std::uint64_t target = 0;
  std::uint64_t cells = 0;
  double millis = 0;
  unsigned value = 0;
};

// Per-call wall-clock milliseconds: best of `batches` batches, each repeating
// the evaluation until it has run for at least `min_batch_millis`. A single
// call slower than that is measured once.
inline double time_evaluation(const Partition& p, Engine engine, unsigned& value,
                              int batches = 5, double min_batch_millis = 20.0) {
  using clock = std::chrono::steady_clock;
  double best = 0;
  for (int b = 0; b < batches; ++b) {
    std::size_t calls = 0;
    const auto start = clock::now();
    double elapsed = 0;
    do {
      value = sg(p, engine).value();
      ++calls;
      elapsed = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    } while (elapsed < min_batch_millis);
    const double per_call = elapsed / double(calls);
    best = b == 0 ? per_call : std::min(best, per_call);
    if (calls == 1 && elapsed > 10 * min_batch_millis) break;
  }
  return best;
}

// One row per (size, engine). Inputs are generated once per size so every
// engine sees the same partition.
inline std::vector<BenchRow> run_benchmark(const std::vector<std::uint64_t>& sizes, Shape shape,
                                           const std::vector<Engine>& engines, std::uint64_t seed,
                                           std::size_t parts = 0) {
  std::mt19937_64 rng(seed);
  std::vector<BenchRow> rows;
  for (std::uint64_t target : sizes) {
    const Partition p = shaped_partition(shape, target, rng, parts);
    for (Engine engine : engines) {
      if (engine == Engine::Naive && p.size() > kNaiveMaxSize) continue;
      BenchRow row{engine, shape, target, p.size(), 0, 0};
      row.millis = time_evaluation(p, engine, row.value);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace lctr
