#ifndef SPHBM_WRIGHT_FISHER_HPP
#define SPHBM_WRIGHT_FISHER_HPP

#include <memory>
#include <vector>

#include "sphbm/death_process.hpp"
#include "sphbm/rng.hpp"

namespace sphbm {

/// The increment law WF_{x,t}(theta1, theta2) of the Wright-Fisher diffusion
/// with mutation parameters theta1, theta2 started at x and run for time t.
struct WrightFisherLaw {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double x = 0.0;
  double t = 0.0;
};

struct WfOptions {
  double exact_floor = kExactRegimeFloor;
  /// Below the floor: refuse (false) or switch to the Gaussian count draw (true).
  bool approx_small_t = false;
  GaussianCalibration calibration = GaussianCalibration::analytic;
};

/// An increment draw together with its internal mixture counts, for
/// instrumented testing: value ~ Beta(theta1 + l, theta2 + m - l) given
/// m ~ A_inf(t), l ~ Binomial(m, x).
struct WfIncrementDetail {
  double value = 0.0;
  int mixture_count = 0;   // m
  int binomial_count = 0;  // l
};

/// Draws exact WF increments; holds the cached death-process series so batch
/// sampling from one law costs one series evaluation. Single-owner like the
/// streams it consumes.
class WfIncrementSampler {
 public:
  explicit WfIncrementSampler(const WrightFisherLaw& law, const WfOptions& opts = {});

  const WrightFisherLaw& law() const { return law_; }

  WfIncrementDetail sample_detail(RngStream& rng);
  double sample(RngStream& rng) { return sample_detail(rng).value; }

 private:
  WrightFisherLaw law_;
  WfOptions opts_;
  bool gaussian_path_ = false;
  std::unique_ptr<DeathProcessSeries> series_;
};

/// One exact draw from WF_{x,t}(theta1, theta2). Convenience wrapper over the
/// sampler class.
double sample_wf_increment(const WrightFisherLaw& law, RngStream& rng, const WfOptions& opts = {});
WfIncrementDetail sample_wf_increment_detail(const WrightFisherLaw& law, RngStream& rng,
                                             const WfOptions& opts = {});

/// Analytic CDF of the increment law: the death-process mixture of binomially
/// weighted Beta CDFs, truncated by the series tail bound. Precomputes the
/// mixture components once, so repeated evaluation is cheap.
class WfMixtureCdf {
 public:
  explicit WfMixtureCdf(const WrightFisherLaw& law, double tail_tol = 1e-10);

  /// P[WF increment <= y] for y in [0, 1].
  double operator()(double y) const;

  /// Central-difference density, used for plot overlays.
  double density(double y, double h = 1e-5) const;

 private:
  struct Component {
    double weight;
    double a;
    double b;
  };
  std::vector<Component> components_;
  double mass_at_zero_ = 0.0;
  double mass_at_one_ = 0.0;
};

}  // namespace sphbm

#endif
