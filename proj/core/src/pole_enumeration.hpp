#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "cechkit/geometry.hpp"

namespace cechkit::detail {

struct Candidate {
  const Vector& point;
  std::size_t axis;
  Orientation orientation;
  // A single-point boundary intersection is a pole for every axis and
  // orientation; `axis` and `orientation` are meaningless then.
  bool every_axis;
  std::span<const std::size_t> subset;
};

struct EnumerationStats {
  std::size_t degenerate_subsets = 0;
};

/// Calls `visit` for every e_q-pole of every boundary intersection of
/// k-subsets, k = 1..min(m, d + 1), in canonical order: k ascending, subsets
/// lexicographic, axis ascending, south before north. Stops as soon as
/// `visit` returns true. Affinely dependent subsets and identical pairs are
/// skipped and counted.
EnumerationStats enumerate_poles(const DiskSystem& system, const Tolerance& tol,
                                 const std::function<bool(const Candidate&)>& visit);

/// Membership in every disk of the system, with the per-disk tolerance.
bool in_all(const DiskSystem& system, const Vector& p, const Tolerance& tol);

/// Calls fn on each k-subset of {0..n-1} in lexicographic order; stops when
/// fn returns true. Returns whether it was stopped.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& fn);

}  // namespace cechkit::detail
