#include <stdexcept>

#include "sphbm/death_process.hpp"

namespace sphbm {

// Placeholder until the calibration run generates the table.
GaussianMoments ainf_gaussian_moments_table(double, double) {
  throw std::runtime_error("calibration table not generated yet");
}

}  // namespace sphbm
