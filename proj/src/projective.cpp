#include "sphbm/projective.hpp"

#include <cmath>
#include <stdexcept>

#include "sphbm/sphere.hpp"
#include "sphbm/vecmath.hpp"

namespace sphbm {

namespace {

constexpr double kNonzeroTol = 1e-12;  // modulus below this counts as a zero coordinate

Quaternion load_element(Field f, std::span<const double> v, int i) {
  switch (f) {
    case Field::real:
      return {v[static_cast<std::size_t>(i)], 0.0, 0.0, 0.0};
    case Field::complex:
      return {v[static_cast<std::size_t>(2 * i)], v[static_cast<std::size_t>(2 * i + 1)], 0.0, 0.0};
    case Field::quaternion: {
      const std::size_t o = static_cast<std::size_t>(4 * i);
      return {v[o], v[o + 1], v[o + 2], v[o + 3]};
    }
  }
  throw std::logic_error("unreachable");
}

void store_element(Field f, std::vector<double>& v, int i, const Quaternion& q) {
  switch (f) {
    case Field::real:
      v[static_cast<std::size_t>(i)] = q.w;
      return;
    case Field::complex:
      v[static_cast<std::size_t>(2 * i)] = q.w;
      v[static_cast<std::size_t>(2 * i + 1)] = q.x;
      return;
    case Field::quaternion: {
      const std::size_t o = static_cast<std::size_t>(4 * i);
      v[o] = q.w;
      v[o + 1] = q.x;
      v[o + 2] = q.y;
      v[o + 3] = q.z;
      return;
    }
  }
}

}  // namespace

int field_real_dim(Field f) {
  switch (f) {
    case Field::real: return 1;
    case Field::complex: return 2;
    case Field::quaternion: return 4;
  }
  throw std::logic_error("unreachable");
}

Field field_from_string(const std::string& s) {
  if (s == "R" || s == "r") return Field::real;
  if (s == "C" || s == "c") return Field::complex;
  if (s == "H" || s == "h") return Field::quaternion;
  throw std::domain_error("unknown field tag '" + s + "' (expected R, C or H)");
}

std::string field_to_string(Field f) {
  switch (f) {
    case Field::real: return "R";
    case Field::complex: return "C";
    case Field::quaternion: return "H";
  }
  throw std::logic_error("unreachable");
}

ProjectivePoint project(Field f, std::vector<double> coords) {
  const int k = field_real_dim(f);
  if (coords.empty() || coords.size() % static_cast<std::size_t>(k) != 0)
    throw std::domain_error("project: coordinate length must be a positive multiple of " +
                            std::to_string(k));
  const int n_plus_1 = static_cast<int>(coords.size()) / k;
  if (n_plus_1 < 2) throw std::domain_error("project: need n >= 1 (at least two homogeneous coordinates)");

  const double total = norm(coords);
  if (total < kNonzeroTol) throw std::domain_error("project: zero vector has no class");
  scale_inplace(coords, 1.0 / total);

  // Last field coordinate with nonzero modulus.
  int last = -1;
  for (int i = n_plus_1 - 1; i >= 0; --i) {
    if (load_element(f, coords, i).norm() > kNonzeroTol) {
      last = i;
      break;
    }
  }
  if (last < 0) throw std::domain_error("project: zero vector has no class");

  // Right-multiply by the unit scalar conj(c)/|c|; right action is the group
  // action on the covering sphere, which matters over H.
  const Quaternion c = load_element(f, coords, last);
  const Quaternion lambda = c.conj() * (1.0 / c.norm());
  for (int i = 0; i < n_plus_1; ++i)
    store_element(f, coords, i, load_element(f, coords, i) * lambda);
  normalize_inplace(coords);

  return ProjectivePoint(f, n_plus_1 - 1, std::move(coords));
}

Quaternion quaternion_inner(std::span<const Quaternion> x, std::span<const Quaternion> y) {
  if (x.size() != y.size()) throw std::domain_error("quaternion_inner: length mismatch");
  Quaternion s{};
  for (std::size_t i = 0; i < x.size(); ++i) s = s + x[i].conj() * y[i];
  return s;
}

Quaternion field_inner(Field f, std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::domain_error("field_inner: length mismatch");
  const int k = field_real_dim(f);
  const int len = static_cast<int>(x.size()) / k;
  Quaternion s{};
  for (int i = 0; i < len; ++i) s = s + load_element(f, x, i).conj() * load_element(f, y, i);
  return s;
}

double projective_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p.field() != q.field() || p.n() != q.n())
    throw std::domain_error("projective_distance: mismatched spaces");
  const double m = std::min(1.0, field_inner(p.field(), p.rep(), q.rep()).norm());
  return std::acos(m);
}

ProjectivePoint sample_projective_increment(const ProjectivePoint& p, double t, RngStream& rng,
                                            const WfOptions& opts) {
  const IncrementDraw draw = sample_increment(SpherePoint(p.rep()), t, rng, opts);
  return project(p.field(), draw.point.coords());
}

}  // namespace sphbm
