#include "annideal/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <random>

#include "annideal/annihilator.hpp"
#include "annideal/sequence.hpp"

namespace annideal {

std::uint64_t multiplication_bound(int n) {
  const auto u = static_cast<std::uint64_t>(n);
  return 2 * (1 + u) + u * (u + 1) / 2;
}

BenchReport run_quadratic_benchmark(std::span<const int> sizes, std::uint64_t seed, int repetitions) {
  BenchReport report;
  report.counted = instrumentation::counting_enabled();
  const Field gf2 = Field::gf2();
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  int longest = 0;
  for (int n : sizes) {
    if (n < 1) throw UsageError("benchmark sizes must be positive");
    longest = std::max(longest, n);
  }
  if (repetitions < 1) throw UsageError("benchmark repetitions must be positive");
  // every size is a prefix of one sequence, with s_0 = 1 so each prefix is nontrivial
  Sequence base{gf2.one()};
  for (int k = 1; k < longest; ++k) base.push_back(gf2.from_integer(bit(rng) ? 1 : 0));

  std::vector<InverseForm> forms;
  for (int n : sizes) {
    forms.push_back(*inverse_form(std::span<const FieldElement>(base).first(static_cast<std::size_t>(n))));
    BenchRow row{n, 0, multiplication_bound(n), std::numeric_limits<double>::infinity()};
    instrumentation::reset_multiplications();
    if (viable_pair(forms.back()).f1.is_zero()) throw InvariantViolation("benchmark produced a zero form");
    row.multiplications = instrumentation::multiplications();
    report.rows.push_back(row);
  }

  // sizes are interleaved within each repetition so slow periods affect all of them
  constexpr double min_sample = 0.05;
  std::vector<std::vector<double>> per_rep(forms.size() > 1 ? forms.size() - 1 : 0);
  std::vector<double> sample(forms.size());
  for (int r = 0; r < repetitions; ++r) {
    for (std::size_t k = 0; k < forms.size(); ++k) {
      int calls = 0;
      double elapsed = 0;
      const auto t0 = std::chrono::steady_clock::now();
      do {
        (void)viable_pair(forms[k]);
        ++calls;
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      } while (elapsed < min_sample);
      sample[k] = elapsed / calls;
      report.rows[k].seconds = std::min(report.rows[k].seconds, sample[k]);
    }
    for (std::size_t k = 1; k < forms.size(); ++k) per_rep[k - 1].push_back(sample[k] / sample[k - 1]);
  }
  // ratios pair samples taken back to back, then take the median over repetitions
  for (auto& v : per_rep) {
    auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    report.ratios.push_back(*mid);
  }
  return report;
}

}  // namespace annideal
