#include "sphbm/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sphbm/special.hpp"
#include "sphbm/sphere.hpp"

namespace sphbm {

namespace {

double ks_p_value(double d, double n_effective) {
  const double sq = std::sqrt(n_effective);
  return kolmogorov_q((sq + 0.12 + 0.11 / sq) * d);
}

}  // namespace

StatReport ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha,
                         std::string name) {
  if (a.empty() || b.empty()) throw std::domain_error("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double ne = na * nb / (na + nb);
  StatReport r;
  r.test_name = std::move(name);
  r.statistic = d;
  r.p_value = ks_p_value(d, ne);
  r.sample_sizes = {a.size(), b.size()};
  r.alpha = alpha;
  r.pass = r.p_value > alpha;
  return r;
}

StatReport ks_one_sample(std::vector<double> a, const std::function<double(double)>& cdf,
                         double alpha, std::string name) {
  if (a.empty()) throw std::domain_error("ks_one_sample: empty sample");
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double d = 0.0;
  double prev_f = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double f = cdf(a[i]);
    if (f < prev_f - 1e-12 || f < -1e-12 || f > 1.0 + 1e-12)
      throw std::domain_error("ks_one_sample: cdf not nondecreasing into [0,1] on sample grid");
    prev_f = f;
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
  }
  StatReport r;
  r.test_name = std::move(name);
  r.statistic = d;
  r.p_value = ks_p_value(d, n);
  r.sample_sizes = {a.size()};
  r.alpha = alpha;
  r.pass = r.p_value > alpha;
  return r;
}

StatReport chi_square_pmf(const std::vector<std::int64_t>& counts,
                          const std::function<double(int)>& pmf, double alpha, std::string name) {
  const std::int64_t total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  if (total <= 0) throw std::domain_error("chi_square_pmf: empty histogram");
  const double n = static_cast<double>(total);

  // Expected counts per raw bin; the open right tail is charged to one
  // overflow bin so probabilities sum to 1.
  std::vector<double> expected(counts.size() + 1, 0.0);
  std::vector<double> observed(counts.size() + 1, 0.0);
  double cum = 0.0;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    const double q = pmf(static_cast<int>(m));
    expected[m] = n * q;
    observed[m] = static_cast<double>(counts[m]);
    cum += q;
  }
  expected.back() = n * std::max(0.0, 1.0 - cum);
  observed.back() = 0.0;

  // Pool both tails inward until every remaining expected count is >= 5.
  std::size_t lo = 0, hi = expected.size() - 1;
  while (lo < hi && expected[lo] < 5.0) {
    expected[lo + 1] += expected[lo];
    observed[lo + 1] += observed[lo];
    ++lo;
  }
  while (hi > lo && expected[hi] < 5.0) {
    expected[hi - 1] += expected[hi];
    observed[hi - 1] += observed[hi];
    --hi;
  }
  const std::size_t bins = hi - lo + 1;
  if (bins < 2) throw std::domain_error("chi_square_pmf: all mass pooled into one bin");

  double stat = 0.0;
  for (std::size_t m = lo; m <= hi; ++m) {
    const double diff = observed[m] - expected[m];
    stat += diff * diff / expected[m];
  }
  const double dof = static_cast<double>(bins - 1);

  StatReport r;
  r.test_name = std::move(name);
  r.statistic = stat;
  r.p_value = gamma_upper_q(dof / 2.0, stat / 2.0);
  r.sample_sizes = {static_cast<std::size_t>(total)};
  r.alpha = alpha;
  r.pass = r.p_value > alpha;
  return r;
}

StatReport mean_decay_check(int d, double t, std::size_t n, RngStream& rng, double alpha) {
  if (d < 2) throw std::domain_error("mean_decay_check: d must be >= 2");
  const SpherePoint z = SpherePoint::north_pole(d);
  SphereBrownianSampler sampler(d, t);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = 1.0 - 2.0 * sampler.sample(z, rng).radial;
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / static_cast<double>(n);
  const double var = std::max(sum2 / static_cast<double>(n) - mean * mean, 1e-300);
  const double se = std::sqrt(var / static_cast<double>(n));
  const double target = std::exp(-0.5 * (d - 1) * t);
  const double z_score = (mean - target) / se;

  StatReport r;
  r.test_name = "mean-decay d=" + std::to_string(d) + " t=" + std::to_string(t);
  r.statistic = z_score;
  r.p_value = 2.0 * (1.0 - normal_cdf(std::abs(z_score)));
  r.sample_sizes = {n};
  r.alpha = alpha;
  r.pass = r.p_value > alpha;
  return r;
}

double total_variation(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  const double na = static_cast<double>(std::accumulate(a.begin(), a.end(), std::int64_t{0}));
  const double nb = static_cast<double>(std::accumulate(b.begin(), b.end(), std::int64_t{0}));
  if (na <= 0 || nb <= 0) throw std::domain_error("total_variation: empty histogram");
  const std::size_t len = std::max(a.size(), b.size());
  double tv = 0.0;
  for (std::size_t m = 0; m < len; ++m) {
    const double pa = m < a.size() ? static_cast<double>(a[m]) / na : 0.0;
    const double pb = m < b.size() ? static_cast<double>(b[m]) / nb : 0.0;
    tv += std::abs(pa - pb);
  }
  return 0.5 * tv;
}

double total_variation_pmf(const std::vector<std::int64_t>& counts,
                           const std::function<double(int)>& pmf, int pmf_support_end) {
  const double n = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
  if (n <= 0) throw std::domain_error("total_variation_pmf: empty histogram");
  const std::size_t len = std::max(counts.size(), static_cast<std::size_t>(pmf_support_end));
  double tv = 0.0;
  double cum = 0.0;
  for (std::size_t m = 0; m < len; ++m) {
    const double p = static_cast<double>(m) < static_cast<double>(pmf_support_end)
                         ? pmf(static_cast<int>(m))
                         : 0.0;
    cum += p;
    const double emp = m < counts.size() ? static_cast<double>(counts[m]) / n : 0.0;
    tv += std::abs(emp - p);
  }
  tv += std::max(0.0, 1.0 - cum);  // PMF mass beyond the evaluated support
  return 0.5 * tv;
}

}  // namespace sphbm
