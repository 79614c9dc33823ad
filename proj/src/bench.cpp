#include "sphbm/bench.hpp"

#include <algorithm>
#include <chrono>

#include "sphbm/oracles.hpp"
#include "sphbm/sphere.hpp"
#include "sphbm/wright_fisher.hpp"

namespace sphbm {

namespace {

using Clock = std::chrono::steady_clock;

// Median per-iteration nanoseconds over cfg.reps batches of size cfg.batch.
template <typename Body>
double median_ns(const BenchConfig& cfg, int batch, Body&& body) {
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(cfg.reps));
  body(batch / 4 + 1);  // warm-up
  for (int r = 0; r < cfg.reps; ++r) {
    const auto start = Clock::now();
    body(batch);
    const auto stop = Clock::now();
    times.push_back(std::chrono::duration<double, std::nano>(stop - start).count() / batch);
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  volatile double sink = 0.0;  // keeps the sampled values observable

  for (const double t : cfg.t_grid) {
    RngStream rng(cfg.seed, 100);
    SphereBrownianSampler sampler(cfg.fixed_d, t);
    const SpherePoint z = SpherePoint::north_pole(cfg.fixed_d);
    const double ns = median_ns(cfg, cfg.batch, [&](int iters) {
      for (int i = 0; i < iters; ++i) sink = sink + sampler.sample(z, rng).radial;
    });
    rows.push_back({"total-vs-t", t, ns});
  }

  for (const int d : cfg.d_grid) {
    RngStream rng(cfg.seed, 200 + static_cast<std::uint64_t>(d));
    SphereBrownianSampler sampler(d, cfg.fixed_t);
    const SpherePoint z = SpherePoint::north_pole(d);
    const double ns = median_ns(cfg, cfg.batch, [&](int iters) {
      for (int i = 0; i < iters; ++i) sink = sink + sampler.sample(z, rng).radial;
    });
    rows.push_back({"total-vs-d", static_cast<double>(d), ns});
  }

  for (const int d : cfg.d_grid) {
    RngStream rng(cfg.seed, 300 + static_cast<std::uint64_t>(d));
    const double half = 0.5 * (d - 1);
    WfIncrementSampler wf(WrightFisherLaw{half, half, 0.0, cfg.fixed_t});
    const double ns = median_ns(cfg, cfg.batch, [&](int iters) {
      for (int i = 0; i < iters; ++i) sink = sink + wf.sample(rng);
    });
    rows.push_back({"wf-vs-d", static_cast<double>(d), ns});
  }

  if (cfg.include_em_oracle) {
    RngStream rng(cfg.seed, 400);
    const SpherePoint z = SpherePoint::north_pole(3);
    const double ns = median_ns(cfg, 8, [&](int iters) {
      for (int i = 0; i < iters; ++i)
        sink = sink + euler_maruyama_sphere(z, cfg.fixed_t, cfg.em_dt, rng)[0];
    });
    rows.push_back({"em-oracle", cfg.em_dt, ns});
  }

  (void)sink;
  return rows;
}

}  // namespace sphbm
