#include "cechkit/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include <Eigen/QR>

namespace cechkit {
namespace {

// Relative pivot threshold below which the normal matrix is treated as rank
// deficient.
constexpr double kRankThreshold = 1e-10;

void require_dimension(std::size_t expected, std::size_t actual) {
  if (expected != actual) throw DimensionMismatch(expected, actual);
}

void require_axis(std::size_t axis, std::size_t dimension) {
  if (axis >= dimension) throw std::out_of_range("axis out of range");
}

// Factorizes N (d x k) as N P = Q R and answers Gram-system queries
// (N^T N) x = b without forming N^T N.
class GramSolver {
 public:
  explicit GramSolver(const Matrix& normals)
      : k_(normals.cols()), qr_(normals.rows(), normals.cols()) {
    if (k_ == 0) return;
    qr_.setThreshold(kRankThreshold);
    qr_.compute(normals);
    const auto rank = static_cast<std::size_t>(qr_.rank());
    if (rank < static_cast<std::size_t>(k_)) throw DegenerateConfiguration(rank, k_);
    basis_ = qr_.householderQ() * Matrix::Identity(normals.rows(), k_);
  }

  // N^T N = P R^T R P^T.
  Vector solve(const Vector& rhs) const {
    if (k_ == 0) return Vector(0);
    const auto r = qr_.matrixR().topLeftCorner(k_, k_).template triangularView<Eigen::Upper>();
    Vector permuted = qr_.colsPermutation().transpose() * rhs;
    Vector z = r.transpose().solve(permuted);
    Vector y = r.solve(z);
    return qr_.colsPermutation() * y;
  }

  // x minus its orthogonal projection onto span(N).
  Vector project_out(const Vector& x) const {
    if (k_ == 0) return x;
    return x - basis_ * (basis_.transpose() * x);
  }

 private:
  Eigen::Index k_;
  Eigen::ColPivHouseholderQR<Matrix> qr_;
  Matrix basis_;
};

Vector unit(std::size_t dimension, std::size_t axis) {
  Vector e = Vector::Zero(static_cast<Eigen::Index>(dimension));
  e[static_cast<Eigen::Index>(axis)] = 1.0;
  return e;
}

// Squared height over `base` of the triangle with sides base, a, b. Heron's
// formula in Kahan's ordering; negative when the triangle inequality fails.
double heron_height_squared(double base, double a, double b) {
  std::array<double, 3> s{base, a, b};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0], y = s[1], z = s[2];
  const double sixteen_area_sq = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return sixteen_area_sq / (4.0 * base * base);
}

// Empty / single point / sphere decision from the squared radius. A sphere
// whose normals span the whole space lives in a 0-dimensional affine
// subspace and can only be a point. The squared radius is a difference of
// O(scale^2) terms, so values within rounding of zero also mean a point.
Intersection classify(Vector center, double radius_sq, Matrix normals,
                      std::vector<std::size_t> generators, double scale, const Tolerance& tol) {
  const double floor = tol.at(scale);
  const double band = tol.eps * (1.0 + scale) * (1.0 + scale);
  const auto dimension = static_cast<Eigen::Index>(center.size());

  if (normals.cols() >= dimension) {
    if (std::abs(radius_sq) <= band) return SinglePoint{std::move(center), std::move(generators)};
    return EmptyIntersection{};
  }
  const double rounding = 16.0 * std::numeric_limits<double>::epsilon() * (1.0 + scale) * (1.0 + scale);
  if (radius_sq > std::max(floor * floor, rounding))
    return ISphere{std::move(center), std::sqrt(radius_sq), std::move(normals), std::move(generators)};
  if (radius_sq >= -band) return SinglePoint{std::move(center), std::move(generators)};
  return EmptyIntersection{};
}

// Builds the pole pair from the projection `direction` of e_axis onto the
// sphere's tangent space. Falls back to another axis' tangent when the
// projection vanishes.
PolePair make_poles(const ISphere& sphere, std::size_t axis, const Vector& direction,
                    const std::function<Vector(const Vector&)>& tangent_projection,
                    const Tolerance& tol) {
  const std::size_t d = sphere.dimension();
  PolePair poles{{sphere.center, axis, Orientation::south, false},
                 {sphere.center, axis, Orientation::north, false}};
  if (sphere.radius == 0.0) return poles;

  const double length = direction.norm();
  if (length > tol.eps) {
    const Vector step = (sphere.radius / length) * direction;
    poles.south.point = sphere.center - step;
    poles.north.point = sphere.center + step;
    return poles;
  }

  poles.south.degenerate_axis = poles.north.degenerate_axis = true;
  for (std::size_t offset = 1; offset < d; ++offset) {
    const Vector tangent = tangent_projection(unit(d, (axis + offset) % d));
    const double tangent_length = tangent.norm();
    if (tangent_length > tol.eps) {
      const Vector step = (sphere.radius / tangent_length) * tangent;
      poles.south.point = sphere.center - step;
      poles.north.point = sphere.center + step;
      break;
    }
  }
  return poles;
}

}  // namespace

bool contains(const Disk& disk, const Vector& p, double tol) {
  require_dimension(disk.dimension(), static_cast<std::size_t>(p.size()));
  if (tol < 0.0) throw std::invalid_argument("tolerance must be non-negative");
  return (p - disk.center()).norm() <= disk.radius() + tol;
}

bool contains(const Disk& disk, const Vector& p, const Tolerance& tol) {
  return contains(disk, p, tol.at(disk.radius()));
}

Intersection intersect_two_spheres(const Disk& first, const Disk& second, const Tolerance& tol) {
  require_dimension(first.dimension(), second.dimension());
  const double r1 = first.radius();
  const double r2 = second.radius();
  const Vector normal = second.center() - first.center();
  const double distance = normal.norm();
  const double scale = std::max(r1, r2);

  if (distance <= tol.at(scale)) {
    if (std::abs(r1 - r2) <= tol.at(scale)) throw CoincidentSpheres();
    return EmptyIntersection{};
  }

  const double t = 0.5 + (r1 * r1 - r2 * r2) / (2.0 * distance * distance);
  Vector center = first.center() + t * normal;
  const double radius_sq = heron_height_squared(distance, r1, r2);
  return classify(std::move(center), radius_sq, Matrix(normal), {0, 1}, scale, tol);
}

PolePair poles_codim1(const ISphere& sphere, std::size_t axis, const Tolerance& tol) {
  if (sphere.codimension() != 1) throw std::invalid_argument("poles_codim1 needs exactly one normal");
  const std::size_t d = sphere.dimension();
  require_axis(axis, d);

  const Vector normal = sphere.normals.col(0);
  const double normal_sq = normal.squaredNorm();
  auto project = [&](const Vector& x) -> Vector {
    Vector v = x - (x.dot(normal) / normal_sq) * normal;
    return v - (v.dot(normal) / normal_sq) * normal;
  };
  return make_poles(sphere, axis, project(unit(d, axis)), project, tol);
}

Intersection reduce_sphere_system(std::span<const Disk> disks, const Tolerance& tol) {
  if (disks.size() < 2) throw std::invalid_argument("reduce_sphere_system needs at least two disks");
  const std::size_t d = disks.front().dimension();
  for (const auto& disk : disks) require_dimension(d, disk.dimension());
  const std::size_t k = disks.size() - 1;
  if (k > d) throw DegenerateConfiguration(d, k);

  const Disk& base = disks.back();
  const double base_sq = base.radius() * base.radius();
  double scale = base.radius();

  Matrix normals(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(k));
  Vector rhs(static_cast<Eigen::Index>(k));
  for (std::size_t j = 0; j < k; ++j) {
    const auto col = static_cast<Eigen::Index>(j);
    normals.col(col) = disks[j].center() - base.center();
    const double rj = disks[j].radius();
    rhs[col] = 0.5 * (base_sq + normals.col(col).squaredNorm() - rj * rj);
    scale = std::max(scale, rj);
  }

  const GramSolver gram(normals);
  const Vector lambda = gram.solve(rhs);
  const Vector offset = normals * lambda;
  Vector center = base.center() + offset;
  const double radius_sq = base_sq - offset.squaredNorm();

  std::vector<std::size_t> generators(disks.size());
  for (std::size_t i = 0; i < generators.size(); ++i) generators[i] = i;
  return classify(std::move(center), radius_sq, std::move(normals), std::move(generators), scale, tol);
}

PolePair poles_general(const ISphere& sphere, std::size_t axis, const Tolerance& tol) {
  const std::size_t d = sphere.dimension();
  require_axis(axis, d);
  const GramSolver gram(sphere.normals);
  const auto q = static_cast<Eigen::Index>(axis);

  // A w = B with A = N^T N, B = -(n_1[q], ..., n_k[q]); Gamma = N w.
  // The pole direction Gamma + e_q has squared norm
  // sum Gamma_i^2 + 2 Gamma_q + 1, so lambda_m = +-r / ||Gamma + e_q||.
  Vector b = -sphere.normals.row(q).transpose();
  Vector gamma = sphere.normals * gram.solve(b);
  Vector direction = gamma + unit(d, axis);
  direction = gram.project_out(direction);

  auto project = [&](const Vector& x) -> Vector { return gram.project_out(gram.project_out(x)); };
  return make_poles(sphere, axis, direction, project, tol);
}

PolePair boundary_poles(const Disk& disk, std::size_t axis) {
  const std::size_t d = disk.dimension();
  require_axis(axis, d);
  const Vector step = disk.radius() * unit(d, axis);
  return {{disk.center() - step, axis, Orientation::south, false},
          {disk.center() + step, axis, Orientation::north, false}};
}

Reduction deduplicate(const DiskSystem& system, const Tolerance& tol) {
  std::vector<Disk> kept;
  std::vector<std::size_t> index_map;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const Disk& candidate = system[i];
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Disk& other) {
      const double slack = tol.at(std::max(candidate.radius(), other.radius()));
      return (candidate.center() - other.center()).norm() <= slack &&
             std::abs(candidate.radius() - other.radius()) <= slack;
    });
    if (!duplicate) {
      kept.push_back(candidate);
      index_map.push_back(i);
    }
  }
  return {DiskSystem(std::move(kept)), std::move(index_map)};
}

Reduction remove_dominated(const DiskSystem& system, const Tolerance& tol) {
  const std::size_t m = system.size();
  auto inside = [&](std::size_t inner, std::size_t outer) {
    const Disk& a = system[inner];
    const Disk& b = system[outer];
    return (a.center() - b.center()).norm() + a.radius() <= b.radius() + tol.at(b.radius());
  };

  std::vector<Disk> kept;
  std::vector<std::size_t> index_map;
  for (std::size_t j = 0; j < m; ++j) {
    bool dominated = false;
    for (std::size_t i = 0; i < m && !dominated; ++i) {
      if (i == j || !inside(i, j)) continue;
      // Mutually contained disks are duplicates; keep the lowest index.
      dominated = !inside(j, i) || i < j;
    }
    if (!dominated) {
      kept.push_back(system[j]);
      index_map.push_back(j);
    }
  }
  return {DiskSystem(std::move(kept)), std::move(index_map)};
}

}  // namespace cechkit
