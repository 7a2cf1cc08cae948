#pragma once

// Shared fixtures for the test suites: worked examples and seeded random
// disk-system generators.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "cechkit/cech.hpp"
#include "cechkit/types.hpp"

namespace cechkit::testing {

inline Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

inline Disk disk(std::initializer_list<double> center, double radius) { return Disk(vec(center), radius); }

// Three disks in R^3 meeting in the single point (3, 0, 0).
inline DiskSystem tangent_triple() {
  return DiskSystem({disk({4, 1, 0}, std::sqrt(2.0)), disk({4, -1, 0}, std::sqrt(2.0)), disk({0, 0, 0}, 3.0)});
}

// The first two disks of tangent_triple plus two more; empty intersection.
inline DiskSystem empty_quadruple() {
  return DiskSystem({disk({4, 1, 0}, std::sqrt(2.0)), disk({4, -1, 0}, std::sqrt(2.0)),
                     disk({0, 1, 0}, std::sqrt(10.0)), disk({3, 0, 1}, 0.9)});
}

// Unit disks on the vertices of an equilateral triangle with side 1.
inline DiskSystem equilateral_triangle() {
  return DiskSystem({disk({0, 0}, 1.0), disk({1, 0}, 1.0), disk({0.5, std::sqrt(3.0) / 2.0}, 1.0)});
}

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t integer(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  double gauss() { return std::normal_distribution<double>()(rng_); }

  Vector point(std::size_t d, double lo = 0.0, double hi = 1.0) {
    Vector p(static_cast<Eigen::Index>(d));
    for (auto& x : p) x = uniform(lo, hi);
    return p;
  }

  Vector direction(std::size_t d) {
    Vector v(static_cast<Eigen::Index>(d));
    do {
      for (auto& x : v) x = gauss();
    } while (v.norm() < 1e-3);
    return v / v.norm();
  }

  /// Centers in [0,1]^d, radii in [0.1, 1].
  DiskSystem system(std::size_t d, std::size_t m) {
    std::vector<Disk> disks;
    for (std::size_t i = 0; i < m; ++i) disks.emplace_back(point(d), uniform(0.1, 1.0));
    return DiskSystem(std::move(disks));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// The system rescaled so that its radii reach `factor` times the Čech
/// scale (intersecting when factor > 1).
inline DiskSystem at_cech_multiple(const DiskSystem& system, double factor) {
  return rescale(system, factor * cech_scale(system, 1e-9).cech_scale);
}

/// A random system rescaled into the Rips range [nu, sqrt(2d/(d+1)) nu]:
/// every pair of disks meets, the whole system may or may not.
inline DiskSystem rips_system(Generator& gen, std::size_t d, std::size_t m) {
  const DiskSystem base = gen.system(d, m);
  const double nu = rips_scale(base);
  return rescale(base, nu * gen.uniform(1.0, rips_to_cech_bound(d)));
}

/// The system with disk `skip` removed.
inline DiskSystem leave_one_out(const DiskSystem& system, std::size_t skip) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < system.size(); ++i)
    if (i != skip) keep.push_back(i);
  return system.subsystem(keep);
}

}  // namespace cechkit::testing
