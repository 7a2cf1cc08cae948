#include "pole_enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <variant>
#include <vector>

namespace cechkit::detail {

bool in_all(const DiskSystem& system, const Vector& p, const Tolerance& tol) {
  return std::all_of(system.begin(), system.end(),
                     [&](const Disk& disk) { return contains(disk, p, tol); });
}

bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& fn) {
  if (k == 0 || k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

namespace {

bool visit_sphere(const ISphere& sphere, std::span<const std::size_t> subset, const Tolerance& tol,
                  const std::function<bool(const Candidate&)>& visit) {
  for (std::size_t q = 0; q < sphere.dimension(); ++q) {
    const PolePair poles =
        sphere.codimension() == 1 ? poles_codim1(sphere, q, tol) : poles_general(sphere, q, tol);
    if (visit({poles.south.point, q, Orientation::south, false, subset})) return true;
    if (visit({poles.north.point, q, Orientation::north, false, subset})) return true;
  }
  return false;
}

bool visit_intersection(const Intersection& intersection, std::span<const std::size_t> subset,
                        const Tolerance& tol, const std::function<bool(const Candidate&)>& visit) {
  if (const auto* point = std::get_if<SinglePoint>(&intersection))
    return visit({point->point, 0, Orientation::south, true, subset});
  if (const auto* sphere = std::get_if<ISphere>(&intersection))
    return visit_sphere(*sphere, subset, tol, visit);
  return false;
}

}  // namespace

EnumerationStats enumerate_poles(const DiskSystem& system, const Tolerance& tol,
                                 const std::function<bool(const Candidate&)>& visit) {
  EnumerationStats stats;
  const std::size_t m = system.size();
  const std::size_t d = system.dimension();

  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t subset[] = {i};
    for (std::size_t q = 0; q < d; ++q) {
      const PolePair poles = boundary_poles(system[i], q);
      if (visit({poles.south.point, q, Orientation::south, false, subset})) return stats;
      if (visit({poles.north.point, q, Orientation::north, false, subset})) return stats;
    }
  }

  // A pair whose boundaries miss each other (or coincide) rules out every
  // larger subset containing it.
  std::vector<char> pair_dead(m * m, 0);
  const std::size_t max_k = std::min(m, d + 1);

  for (std::size_t k = 2; k <= max_k; ++k) {
    std::vector<Disk> members;
    const bool stopped = for_each_combination(m, k, [&](std::span<const std::size_t> subset) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
          if (pair_dead[subset[a] * m + subset[b]]) return false;

      Intersection intersection;
      try {
        if (k == 2) {
          intersection = intersect_two_spheres(system[subset[0]], system[subset[1]], tol);
        } else {
          members.clear();
          for (auto i : subset) members.push_back(system[i]);
          intersection = reduce_sphere_system(members, tol);
        }
      } catch (const CoincidentSpheres&) {
        ++stats.degenerate_subsets;
        pair_dead[subset[0] * m + subset[1]] = 1;
        return false;
      } catch (const DegenerateConfiguration&) {
        ++stats.degenerate_subsets;
        return false;
      }

      if (k == 2 && std::holds_alternative<EmptyIntersection>(intersection)) {
        pair_dead[subset[0] * m + subset[1]] = 1;
        return false;
      }
      return visit_intersection(intersection, subset, tol, visit);
    });
    if (stopped) break;
  }
  return stats;
}

}  // namespace cechkit::detail
