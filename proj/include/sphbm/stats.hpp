#ifndef SPHBM_STATS_HPP
#define SPHBM_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sphbm/rng.hpp"

namespace sphbm {

struct StatReport {
  std::string test_name;
  double statistic = 0.0;
  double p_value = 1.0;
  std::vector<std::size_t> sample_sizes;
  double alpha = 0.01;
  bool pass = false;
};

/// Two-sample Kolmogorov-Smirnov with the asymptotic p-value.
StatReport ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha = 0.01,
                         std::string name = "ks-two-sample");

/// One-sample KS against a nondecreasing CDF handle. Throws std::domain_error
/// if the handle decreases on the sample grid or the sample is empty.
StatReport ks_one_sample(std::vector<double> a, const std::function<double(double)>& cdf,
                         double alpha = 0.01, std::string name = "ks-one-sample");

/// Pearson chi-square of an integer histogram (counts[m] = #draws equal to m)
/// against a PMF handle. Bins are pooled from both tails until every expected
/// count is >= 5; dof = bins - 1.
StatReport chi_square_pmf(const std::vector<std::int64_t>& counts,
                          const std::function<double(int)>& pmf, double alpha = 0.01,
                          std::string name = "chi-square-pmf");

/// z-test of the empirical mean of <Z_t, z> from the exact sphere sampler
/// against exp(-(d-1)t/2). alpha defaults to the two-sided 3-sigma level.
StatReport mean_decay_check(int d, double t, std::size_t n, RngStream& rng, double alpha = 0.0027);

/// Total variation distance between two empirical histograms over {0,1,...}.
double total_variation(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// Total variation between an empirical histogram and a PMF handle.
double total_variation_pmf(const std::vector<std::int64_t>& counts,
                           const std::function<double(int)>& pmf, int pmf_support_end);

}  // namespace sphbm

#endif
