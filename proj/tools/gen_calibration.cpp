// Regenerates the oracle-estimated (mean, variance) calibration table for the
// small-t Gaussian approximation of the death-process marginal. Output is the
// body of src/gaussian_table.cpp. Slow (minutes); development use only.
#include <cstdio>
#include <cmath>
#include <vector>

#include "sphbm/death_process.hpp"
#include "sphbm/rng.hpp"

int main() {
  const std::vector<double> thetas = {0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0};
  const std::vector<double> ts = {0.005, 0.01, 0.02, 0.03, 0.04, 0.05};
  const std::size_t draws = 200000;

  std::printf("// theta grid:");
  for (double th : thetas) std::printf(" %g", th);
  std::printf("\n// t grid:");
  for (double t : ts) std::printf(" %g", t);
  std::printf("\n// draws per cell: %zu\n", draws);

  sphbm::RngStream rng(987654321, 42);
  for (double theta : thetas) {
    for (double t : ts) {
      // Start high enough that A_n(t) ~ A_inf(t): the mean is ~2/t, use 10x.
      const int n_start = static_cast<int>(std::ceil(20.0 / t));
      double sum = 0.0, sum2 = 0.0;
      for (std::size_t i = 0; i < draws; ++i) {
        const double m = sphbm::simulate_death_process(n_start, theta, t, rng);
        sum += m;
        sum2 += m * m;
      }
      const double mean = sum / draws;
      const double var = sum2 / draws - mean * mean;
      std::printf("    {%.17g, %.17g, %.17g, %.17g},\n", theta, t, mean, var);
      std::fflush(stdout);
    }
  }
  return 0;
}
