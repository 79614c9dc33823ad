#ifndef SPHBM_PROJECTIVE_HPP
#define SPHBM_PROJECTIVE_HPP

#include <span>
#include <string>
#include <vector>

#include "sphbm/quaternion.hpp"
#include "sphbm/rng.hpp"
#include "sphbm/wright_fisher.hpp"

namespace sphbm {

enum class Field { real, complex, quaternion };

/// Real coordinates per field element: 1, 2 or 4.
int field_real_dim(Field f);
Field field_from_string(const std::string& s);  // "R" | "C" | "H"
std::string field_to_string(Field f);

/// A point of FP^n in homogeneous coordinates, stored through its canonical
/// unit-norm representative: the last nonzero field coordinate is real and
/// strictly positive, so equal classes have equal reps (within tolerance).
/// The representative is a flat real vector of length field_real_dim * (n+1),
/// field elements contiguous, which is exactly a point of the covering sphere.
class ProjectivePoint {
 public:
  Field field() const { return field_; }
  int n() const { return n_; }
  int ambient_real_dim() const { return static_cast<int>(rep_.size()); }
  const std::vector<double>& rep() const { return rep_; }

 private:
  friend ProjectivePoint project(Field, std::vector<double>);
  ProjectivePoint(Field f, int n, std::vector<double> rep)
      : field_(f), n_(n), rep_(std::move(rep)) {}
  Field field_;
  int n_;
  std::vector<double> rep_;
};

/// The quotient map: canonicalizes a nonzero coordinate vector (flat real
/// layout) into the class representative. Throws std::domain_error on the
/// zero vector or a length that is not a multiple of the field dimension.
ProjectivePoint project(Field f, std::vector<double> coords);

/// Fubini-Study-type distance arccos |<p, q>_F| in [0, pi/2].
double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q);

/// Exact BM increment on FP^n: run the spherical sampler on the covering
/// sphere from the representative and project the result.
ProjectivePoint sample_projective_increment(const ProjectivePoint& p, double t, RngStream& rng,
                                            const WfOptions& opts = {});

/// sum_i conj(x_i) y_i with Hamilton products; with the right group action
/// convention, |<x, y lambda>| = |<x, y>| for unit lambda.
Quaternion quaternion_inner(std::span<const Quaternion> x, std::span<const Quaternion> y);

/// Field inner product of two flat coordinate vectors, returned as a
/// quaternion (real/complex values embed in the w[, x] components).
Quaternion field_inner(Field f, std::span<const double> x, std::span<const double> y);

}  // namespace sphbm

#endif
