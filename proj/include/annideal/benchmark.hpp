#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace annideal {

struct BenchRow {
  int n = 0;
  std::uint64_t multiplications = 0;
  /// 2(1 + n) + n(n + 1)/2.
  std::uint64_t bound = 0;
  /// Mean time per call, minimum over the repetitions.
  double seconds = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  /// Median over the repetitions of time(size k + 1) / time(size k), timed back to back.
  std::vector<double> ratios;
  bool counted = false;
};

std::uint64_t multiplication_bound(int n);

/// viable_pair on prefixes of one random GF(2) sequence; each timing sample runs for at least 50 ms.
BenchReport run_quadratic_benchmark(std::span<const int> sizes, std::uint64_t seed, int repetitions = 5);

}  // namespace annideal
