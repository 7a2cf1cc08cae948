#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace cechkit {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public GeometryError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Raised when a set of disk centers is affinely dependent, so the
/// hyperplane system describing the boundary intersection has no unique
/// solution.
class DegenerateConfiguration : public GeometryError {
 public:
  DegenerateConfiguration(std::size_t rank, std::size_t expected_rank);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t expected_rank() const noexcept { return expected_rank_; }

 private:
  std::size_t rank_;
  std::size_t expected_rank_;
};

/// Two identical disks: their boundaries intersect in a whole sphere and the
/// caller has to treat them as one disk.
class CoincidentSpheres : public GeometryError {
 public:
  CoincidentSpheres();
};

/// Closed ball with positive radius.
class Disk {
 public:
  Disk(Vector center, double radius);

  const Vector& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(center_.size()); }

  friend bool operator==(const Disk& a, const Disk& b) {
    return a.radius_ == b.radius_ && a.center_ == b.center_;
  }

 private:
  Vector center_;
  double radius_;
};

/// Finite, non-empty, ordered collection of disks of one ambient dimension.
class DiskSystem {
 public:
  explicit DiskSystem(std::vector<Disk> disks);

  std::size_t size() const noexcept { return disks_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }

  const Disk& operator[](std::size_t i) const { return disks_[i]; }
  std::span<const Disk> disks() const noexcept { return disks_; }
  auto begin() const noexcept { return disks_.begin(); }
  auto end() const noexcept { return disks_.end(); }

  DiskSystem subsystem(std::span<const std::size_t> indices) const;

  friend bool operator==(const DiskSystem&, const DiskSystem&) = default;

 private:
  std::vector<Disk> disks_;
  std::size_t dimension_;
};

}  // namespace cechkit
