#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "sphbm/death_process.hpp"
#include "sphbm/errors.hpp"
#include "sphbm/rng.hpp"
#include "sphbm/stats.hpp"

using namespace sphbm;

namespace {

std::vector<std::int64_t> oracle_histogram(int n_start, double theta, double t, std::size_t draws,
                                           RngStream& rng) {
  std::vector<std::int64_t> counts;
  for (std::size_t i = 0; i < draws; ++i) {
    const int m = simulate_death_process(n_start, theta, t, rng);
    if (static_cast<std::size_t>(m) >= counts.size())
      counts.resize(static_cast<std::size_t>(m) + 1, 0);
    ++counts[static_cast<std::size_t>(m)];
  }
  return counts;
}

// 99% Wilson score interval for a binomial proportion.
std::pair<double, double> wilson99(double successes, double n) {
  const double z = 2.5758293035489004;  // Phi^{-1}(0.995)
  const double phat = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
  return {center - half, center + half};
}

}  // namespace

TEST_CASE("death oracle: single lineage absorbs at analytic exponential rate") {
  // From n=1 with theta=2 the only holding time has rate 1*(1+2-1)/2 = 1.
  RngStream rng(101, 0);
  const std::size_t n = 100000;
  for (const double t : {0.3, 1.0}) {
    std::size_t absorbed = 0;
    for (std::size_t i = 0; i < n; ++i)
      absorbed += simulate_death_process(1, 2.0, t, rng) == 0 ? 1 : 0;
    const double target = 1.0 - std::exp(-t);
    const double se = std::sqrt(target * (1.0 - target) / static_cast<double>(n));
    CHECK(std::abs(static_cast<double>(absorbed) / n - target) < 3.0 * se);
  }
}

TEST_CASE("death oracle: large t absorbs at zero") {
  RngStream rng(102, 0);
  for (int i = 0; i < 100; ++i) CHECK(simulate_death_process(50, 3.0, 200.0, rng) == 0);
}

TEST_CASE("death oracle: saturation in the starting level") {
  // Histograms from n=500 and n=1000 agree, so n=1000 stands in for n=infinity.
  RngStream rng(103, 0);
  const std::size_t n = 1000000;
  auto h500 = oracle_histogram(500, 3.0, 0.5, n, rng);
  auto h1000 = oracle_histogram(1000, 3.0, 0.5, n, rng);
  CHECK(total_variation(h500, h1000) < 0.005);
}

TEST_CASE("death pmf: series coefficients validated against the oracle") {
  // The alternating-series coefficients are external input; the Monte Carlo
  // death process is ground truth for them across the working grid.
  RngStream rng(104, 0);
  const std::size_t draws = 100000;
  for (const double theta : {1.0, 2.0, 3.0, 5.0}) {
    for (const double t : {0.05, 0.1, 0.5, 1.0, 5.0}) {
      CAPTURE(theta);
      CAPTURE(t);
      DeathProcessSeries series(DeathProcessLaw{theta, t});
      const auto counts = oracle_histogram(1000, theta, t, draws, rng);
      const int support_end = series.truncation_point(1e-10) + 1;
      const double tv = total_variation_pmf(
          counts, [&series](int m) { return series.pmf(m); }, support_end);
      CHECK(tv < 0.01);
    }
  }
}

TEST_CASE("death pmf: normalization within 1e-8 at the tail bound") {
  DeathProcessSeries series(DeathProcessLaw{2.0, 1.0});
  const int m_end = series.truncation_point(1e-9);
  double sum = 0.0;
  for (int m = 0; m <= m_end; ++m) sum += series.pmf(m);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-8));
  for (int m = 0; m <= m_end; ++m) {
    CHECK(series.pmf(m) >= 0.0);
    CHECK(series.pmf(m) <= 1.0);
  }
}

TEST_CASE("death pmf: q_0 at large t inside the oracle Wilson interval") {
  RngStream rng(105, 0);
  const std::size_t n = 100000;
  std::size_t at_zero = 0;
  for (std::size_t i = 0; i < n; ++i)
    at_zero += simulate_death_process(500, 2.0, 10.0, rng) == 0 ? 1 : 0;
  const auto [lo, hi] = wilson99(static_cast<double>(at_zero), static_cast<double>(n));
  const double q0 = death_pmf(DeathProcessLaw{2.0, 10.0}, 0);
  CHECK(q0 >= lo);
  CHECK(q0 <= hi);
  CHECK(q0 > 0.999);
}

TEST_CASE("death pmf: envelopes bracket and tv vs oracle at theta=3 t=0.5") {
  RngStream rng(106, 0);
  DeathProcessSeries series(DeathProcessLaw{3.0, 0.5});
  for (int m = 0; m < 30; ++m) {
    const auto [lo, hi] = series.envelope(m);
    CHECK(lo <= hi);
    CHECK(lo >= 0.0);
    CHECK(hi <= 1.0);
    CHECK(hi - lo < 1e-10);
  }
  const auto counts = oracle_histogram(1000, 3.0, 0.5, 100000, rng);
  const double tv = total_variation_pmf(
      counts, [&series](int m) { return series.pmf(m); }, series.truncation_point(1e-10) + 1);
  CHECK(tv < 0.01);
}

TEST_CASE("death pmf: domain and convergence errors") {
  CHECK_THROWS_AS(death_pmf(DeathProcessLaw{2.0, 0.0}, 0), std::domain_error);
  CHECK_THROWS_AS(death_pmf(DeathProcessLaw{-1.0, 1.0}, 0), std::domain_error);
  CHECK_THROWS_AS(death_pmf(DeathProcessLaw{2.0, 1.0}, -1), std::domain_error);
  // Far below the floor the series terms overflow before the monotone regime.
  CHECK_THROWS_AS(death_pmf(DeathProcessLaw{2.0, 1e-4}, 3), ConvergenceError);
}

TEST_CASE("sample_ainf: exact regime floor is enforced but overridable") {
  RngStream rng(107, 0);
  DeathProcessLaw law{2.0, 0.04};
  CHECK_THROWS_AS(sample_ainf(law, rng), RegimeError);
  CHECK_NOTHROW(sample_ainf(law, rng, SmallTimePolicy::force_exact));
  CHECK_NOTHROW(sample_ainf(law, rng, SmallTimePolicy::gaussian));
}

TEST_CASE("sample_ainf: almost surely zero at large t") {
  RngStream rng(108, 0);
  DeathProcessSeries series(DeathProcessLaw{2.0, 50.0});
  std::size_t zeros = 0;
  const std::size_t n = 10000;
  for (std::size_t i = 0; i < n; ++i) zeros += sample_ainf(series, rng) == 0 ? 1 : 0;
  CHECK(static_cast<double>(zeros) / n > 0.999);
}

TEST_CASE("sample_ainf: histogram matches the series pmf (chi-square grid)") {
  RngStream rng(109, 0);
  const std::size_t n = 100000;
  for (const double theta : {1.0, 2.0, 3.0, 5.0}) {
    for (const double t : {0.05, 0.1, 0.5, 1.0, 5.0}) {
      CAPTURE(theta);
      CAPTURE(t);
      DeathProcessSeries series(DeathProcessLaw{theta, t});
      std::vector<std::int64_t> counts;
      for (std::size_t i = 0; i < n; ++i) {
        const int m = sample_ainf(series, rng);
        if (static_cast<std::size_t>(m) >= counts.size())
          counts.resize(static_cast<std::size_t>(m) + 1, 0);
        ++counts[static_cast<std::size_t>(m)];
      }
      const auto report =
          chi_square_pmf(counts, [&series](int m) { return series.pmf(m); }, 0.01);
      CAPTURE(report.statistic);
      CHECK(report.p_value > 0.01);
    }
  }
}

TEST_CASE("sample_ainf: exact draws at t=0.05 match the oracle") {
  RngStream rng(110, 0);
  const std::size_t n = 100000;
  DeathProcessSeries series(DeathProcessLaw{4.0, 0.05});
  std::vector<std::int64_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    const int m = sample_ainf(series, rng);
    if (static_cast<std::size_t>(m) >= counts.size())
      counts.resize(static_cast<std::size_t>(m) + 1, 0);
    ++counts[static_cast<std::size_t>(m)];
  }
  const auto oracle = oracle_histogram(1000, 4.0, 0.05, n, rng);
  CHECK(total_variation(counts, oracle) < 0.02);
}

TEST_CASE("gaussian approximation: nonnegative integers, oracle tv and mean") {
  RngStream rng(111, 0);
  const DeathProcessLaw law{2.0, 0.04};
  const std::size_t n = 100000;
  std::vector<std::int64_t> counts;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const int m = sample_ainf_gaussian(law, rng);
    CHECK(m >= 0);
    sum += m;
    if (static_cast<std::size_t>(m) >= counts.size())
      counts.resize(static_cast<std::size_t>(m) + 1, 0);
    ++counts[static_cast<std::size_t>(m)];
  }
  const auto oracle = oracle_histogram(2000, 2.0, 0.04, n, rng);
  CHECK(total_variation(counts, oracle) < 0.05);

  double oracle_sum = 0.0, oracle_n = 0.0;
  for (std::size_t m = 0; m < oracle.size(); ++m) {
    oracle_sum += static_cast<double>(m) * static_cast<double>(oracle[m]);
    oracle_n += static_cast<double>(oracle[m]);
  }
  const double oracle_mean = oracle_sum / oracle_n;
  CHECK(std::abs(sum / static_cast<double>(n) - oracle_mean) < 0.02 * oracle_mean);
}

TEST_CASE("gaussian approximation: calibration table agrees with the oracle too") {
  RngStream rng(112, 0);
  const DeathProcessLaw law{2.0, 0.02};
  const std::size_t n = 50000;
  std::vector<std::int64_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    const int m = sample_ainf_gaussian(law, rng, GaussianCalibration::table);
    if (static_cast<std::size_t>(m) >= counts.size())
      counts.resize(static_cast<std::size_t>(m) + 1, 0);
    ++counts[static_cast<std::size_t>(m)];
  }
  const auto oracle = oracle_histogram(2000, 2.0, 0.02, n, rng);
  CHECK(total_variation(counts, oracle) < 0.05);
}
