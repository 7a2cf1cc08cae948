#pragma once

// Disks, intersections of their boundary spheres, and poles of those
// intersections.
//
// An i-sphere is stored as its center, its radius, and the normals spanning
// the orthogonal complement of its affine hull. With k normals in R^d the
// i-sphere lives in a (d - k)-dimensional affine subspace. Axis indices are
// zero-based throughout.

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "cechkit/tolerance.hpp"
#include "cechkit/types.hpp"

namespace cechkit {

struct ISphere {
  Vector center;
  double radius = 0.0;
  Matrix normals;  // d x k, one normal per column, unnormalized
  std::vector<std::size_t> generators;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(center.size()); }
  std::size_t codimension() const noexcept { return static_cast<std::size_t>(normals.cols()); }
};

struct EmptyIntersection {};

struct SinglePoint {
  Vector point;
  std::vector<std::size_t> generators;
};

using Intersection = std::variant<EmptyIntersection, SinglePoint, ISphere>;

enum class Orientation { south, north };

struct Pole {
  Vector point;
  std::size_t axis = 0;
  Orientation orientation = Orientation::south;
  // The axis projection is constant on the sphere, so every point is a pole.
  bool degenerate_axis = false;
};

struct PolePair {
  Pole south;
  Pole north;
};

/// ||p - center|| <= radius + tol.
bool contains(const Disk& disk, const Vector& p, double tol);

/// Tolerance-aware membership: slack scales with the disk radius.
bool contains(const Disk& disk, const Vector& p, const Tolerance& tol);

/// Boundary intersection of two disks. The sphere's center and radius come
/// from the closed form along the center line (radius by Heron's formula on
/// the triangle c1, c2, p); its single normal is c2 - c1.
/// Throws CoincidentSpheres for identical disks; concentric disks with
/// different radii have disjoint boundaries.
Intersection intersect_two_spheres(const Disk& first, const Disk& second, const Tolerance& tol = {});

/// Poles of a sphere with exactly one normal, via projection of e_axis onto
/// the hyperplane orthogonal to that normal.
PolePair poles_codim1(const ISphere& sphere, std::size_t axis, const Tolerance& tol = {});

/// Boundary intersection of 2 <= m <= d + 1 disks, with the last disk as
/// base: solves sum_j lambda_j (c_k - c_m).(c_j - c_m) =
/// (r_m^2 + ||c_k - c_m||^2 - r_k^2) / 2 and sets r^2 = r_m^2 - ||c - c_m||^2.
/// Normals are n_j = c_j - c_m. Generators are positions within `disks`.
/// Throws DegenerateConfiguration when the centers are affinely dependent.
Intersection reduce_sphere_system(std::span<const Disk> disks, const Tolerance& tol = {});

/// Poles of an i-sphere with any number of normals, from the linear system
/// A w = B with A = (n_i . n_j) and B = (-n_j[axis]).
/// Throws DegenerateConfiguration when the normals are linearly dependent.
PolePair poles_general(const ISphere& sphere, std::size_t axis, const Tolerance& tol = {});

/// c -/+ r e_axis.
PolePair boundary_poles(const Disk& disk, std::size_t axis);

/// A system with some disks removed, plus where each survivor came from.
struct Reduction {
  DiskSystem system;
  std::vector<std::size_t> index_map;  // reduced index -> original index
};

/// Drops exact duplicates (within tolerance), keeping the lowest index.
Reduction deduplicate(const DiskSystem& system, const Tolerance& tol = {});

/// Drops every disk that contains another disk of the system. The
/// intersection of all disks is unchanged and no two survivors are
/// concentric.
Reduction remove_dominated(const DiskSystem& system, const Tolerance& tol = {});

}  // namespace cechkit
