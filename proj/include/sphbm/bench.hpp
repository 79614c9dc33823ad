#ifndef SPHBM_BENCH_HPP
#define SPHBM_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sphbm {

struct BenchConfig {
  std::uint64_t seed = 1;
  int reps = 9;          // medians over this many repetitions
  int batch = 2048;      // increments per repetition
  std::vector<double> t_grid = {0.05, 0.1, 0.5, 1.0, 5.0};
  std::vector<int> d_grid = {3, 10, 100, 1000};
  int fixed_d = 5;       // dimension for the t sweep
  double fixed_t = 1.0;  // horizon for the d sweep
  bool include_em_oracle = true;
  double em_dt = 1e-4;
};

/// One measurement: median wall time per increment for a (series, param) cell.
struct BenchRow {
  std::string series;  // total-vs-t | total-vs-d | wf-vs-d | em-oracle
  double param = 0.0;  // t or d (or dt for the oracle row)
  double ns_per_increment = 0.0;
};

std::vector<BenchRow> run_benchmark(const BenchConfig& cfg);

}  // namespace sphbm

#endif
