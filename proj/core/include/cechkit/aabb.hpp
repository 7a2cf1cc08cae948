#pragma once

// Minimal axis-aligned bounding boxes of disk intersections.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cechkit/geometry.hpp"
#include "cechkit/tolerance.hpp"
#include "cechkit/types.hpp"

namespace cechkit {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double width() const noexcept { return upper - lower; }
  bool inverted() const noexcept { return lower > upper; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Product of per-axis intervals. Degenerate (zero-width) and inverted
/// (lower > upper) intervals are ordinary values; an inverted box certifies
/// that whatever it was meant to bound is empty.
class Box {
 public:
  explicit Box(std::vector<Interval> intervals);

  std::size_t dimension() const noexcept { return intervals_.size(); }
  const Interval& operator[](std::size_t axis) const { return intervals_[axis]; }
  std::span<const Interval> intervals() const noexcept { return intervals_; }

  bool proper() const noexcept;
  bool inverted() const noexcept { return !proper(); }
  /// Proper with at least one side of width <= tol.
  bool degenerate(double tol = 0.0) const noexcept;
  bool contains(const Vector& p, double slack = 0.0) const;
  /// Every interval of `inner` lies within this box's, up to slack.
  bool encloses(const Box& inner, double slack = 0.0) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Closed-form box of two disks: per axis the lower bound is the first
/// disk's south pole if it lies in the other disk, else the second's, else
/// the south pole of the boundary intersection (symmetric for upper bounds).
/// nullopt when the disks are disjoint.
std::optional<Box> aabb_two_disks(const Disk& first, const Disk& second, const Tolerance& tol = {});

/// Poles of every boundary intersection that lie in all disks.
std::vector<Pole> retained_poles(const DiskSystem& system, const Tolerance& tol = {});

/// Minimal box of the intersection of all disks, from the e_q-poles of all
/// boundary intersections that lie in every disk. nullopt when no pole is
/// retained, i.e. the disks share no point.
std::optional<Box> aabb_minimal(const DiskSystem& system, const Tolerance& tol = {});

/// Per axis [max of lowers, min of uppers]. Never fails on inversion.
Box box_intersect(std::span<const Box> boxes);

}  // namespace cechkit
