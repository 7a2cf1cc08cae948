#include "cechkit/aabb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>

#include "pole_enumeration.hpp"

namespace cechkit {

Box::Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw std::invalid_argument("box must have dimension >= 1");
}

bool Box::proper() const noexcept {
  return std::none_of(intervals_.begin(), intervals_.end(),
                      [](const Interval& i) { return i.inverted(); });
}

bool Box::degenerate(double tol) const noexcept {
  return proper() && std::any_of(intervals_.begin(), intervals_.end(),
                                 [tol](const Interval& i) { return i.width() <= tol; });
}

bool Box::contains(const Vector& p, double slack) const {
  if (static_cast<std::size_t>(p.size()) != dimension()) throw DimensionMismatch(dimension(), p.size());
  for (std::size_t q = 0; q < dimension(); ++q) {
    const double x = p[static_cast<Eigen::Index>(q)];
    if (x < intervals_[q].lower - slack || x > intervals_[q].upper + slack) return false;
  }
  return true;
}

bool Box::encloses(const Box& inner, double slack) const {
  if (inner.dimension() != dimension()) throw DimensionMismatch(dimension(), inner.dimension());
  for (std::size_t q = 0; q < dimension(); ++q) {
    if (inner[q].lower < intervals_[q].lower - slack || inner[q].upper > intervals_[q].upper + slack)
      return false;
  }
  return true;
}

namespace {

// Lower or upper bound along `axis` of D1 ∩ D2 following the two-disk case
// analysis. `sign` is -1 for the lower bound, +1 for the upper.
double two_disk_bound(const Disk& first, const Disk& second, const Intersection& boundary,
                      std::size_t axis, int sign, const Tolerance& tol) {
  const auto q = static_cast<Eigen::Index>(axis);
  const PolePair first_poles = boundary_poles(first, axis);
  const Pole& first_pole = sign < 0 ? first_poles.south : first_poles.north;
  if (contains(second, first_pole.point, tol)) return first_pole.point[q];

  const PolePair second_poles = boundary_poles(second, axis);
  const Pole& second_pole = sign < 0 ? second_poles.south : second_poles.north;
  if (contains(first, second_pole.point, tol)) return second_pole.point[q];

  if (const auto* point = std::get_if<SinglePoint>(&boundary)) return point->point[q];
  if (const auto* sphere = std::get_if<ISphere>(&boundary)) {
    const PolePair poles = poles_codim1(*sphere, axis, tol);
    return (sign < 0 ? poles.south : poles.north).point[q];
  }
  throw std::logic_error("intersecting disks with no boundary intersection");
}

}  // namespace

std::optional<Box> aabb_two_disks(const Disk& first, const Disk& second, const Tolerance& tol) {
  if (first.dimension() != second.dimension())
    throw DimensionMismatch(first.dimension(), second.dimension());
  const double distance = (first.center() - second.center()).norm();
  if (distance > first.radius() + second.radius() + tol.at(std::max(first.radius(), second.radius())))
    return std::nullopt;

  Intersection boundary = EmptyIntersection{};
  try {
    boundary = intersect_two_spheres(first, second, tol);
  } catch (const CoincidentSpheres&) {
    // Identical disks: the disk poles settle every bound below.
  }

  std::vector<Interval> intervals(first.dimension());
  for (std::size_t q = 0; q < first.dimension(); ++q) {
    intervals[q] = {two_disk_bound(first, second, boundary, q, -1, tol),
                    two_disk_bound(first, second, boundary, q, +1, tol)};
  }
  return Box(std::move(intervals));
}

std::vector<Pole> retained_poles(const DiskSystem& system, const Tolerance& tol) {
  std::vector<Pole> poles;
  detail::enumerate_poles(system, tol, [&](const detail::Candidate& c) {
    if (!detail::in_all(system, c.point, tol)) return false;
    if (c.every_axis) {
      for (std::size_t q = 0; q < system.dimension(); ++q) {
        poles.push_back({c.point, q, Orientation::south, false});
        poles.push_back({c.point, q, Orientation::north, false});
      }
    } else {
      poles.push_back({c.point, c.axis, c.orientation, false});
    }
    return false;
  });
  return poles;
}

std::optional<Box> aabb_minimal(const DiskSystem& system, const Tolerance& tol) {
  const std::size_t d = system.dimension();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<Interval> envelope(d, Interval{inf, -inf});
  bool any = false;

  detail::enumerate_poles(system, tol, [&](const detail::Candidate& c) {
    if (!detail::in_all(system, c.point, tol)) return false;
    any = true;
    for (std::size_t q = 0; q < d; ++q) {
      const double x = c.point[static_cast<Eigen::Index>(q)];
      const bool is_south = c.every_axis || (c.axis == q && c.orientation == Orientation::south);
      const bool is_north = c.every_axis || (c.axis == q && c.orientation == Orientation::north);
      if (is_south) envelope[q].lower = std::min(envelope[q].lower, x);
      if (is_north) envelope[q].upper = std::max(envelope[q].upper, x);
    }
    return false;
  });
  if (!any) return std::nullopt;

  for (const auto& interval : envelope) {
    if (!std::isfinite(interval.lower) || !std::isfinite(interval.upper))
      throw std::logic_error("retained poles do not cover every axis");
  }
  return Box(std::move(envelope));
}

Box box_intersect(std::span<const Box> boxes) {
  if (boxes.empty()) throw std::invalid_argument("box_intersect needs at least one box");
  std::vector<Interval> result(boxes.front().intervals().begin(), boxes.front().intervals().end());
  for (const auto& box : boxes.subspan(1)) {
    if (box.dimension() != result.size()) throw DimensionMismatch(result.size(), box.dimension());
    for (std::size_t q = 0; q < result.size(); ++q) {
      result[q].lower = std::max(result[q].lower, box[q].lower);
      result[q].upper = std::min(result[q].upper, box[q].upper);
    }
  }
  return Box(std::move(result));
}

}  // namespace cechkit
