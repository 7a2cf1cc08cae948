#pragma once

// Vietoris-Rips and Čech scales of disk systems, and the pole-based decision
// of whether all disks share a point.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cechkit/tolerance.hpp"
#include "cechkit/types.hpp"

namespace cechkit {

inline constexpr double kDefaultEta = 1e-6;

struct CechDecision {
  bool is_cech = false;
  std::optional<Vector> witness;  // a pole contained in every disk
  std::vector<std::size_t> generating_subset;  // disks whose boundaries produced the witness
  std::size_t degenerate_subsets = 0;  // affinely dependent subsets that were skipped

  bool degenerate() const noexcept { return degenerate_subsets > 0; }
};

struct ScaleReport {
  double rips_scale = 0.0;
  double cech_scale = 0.0;  // upper end of the final bracket
  double eta = kDefaultEta;
  std::pair<double, double> bracket{0.0, 0.0};
  std::size_t iterations = 0;
  std::optional<Vector> witness;  // common point of the system rescaled by cech_scale
  bool degenerate = false;
};

/// max over pairs of ||c_i - c_j|| / (r_i + r_j); 0 for a single disk.
double rips_scale(const DiskSystem& system);

/// Same centers, radii multiplied by lambda > 0.
DiskSystem rescale(const DiskSystem& system, double lambda);

/// sqrt(2d / (d + 1)): the Čech scale never exceeds this multiple of the
/// Vietoris-Rips scale.
double rips_to_cech_bound(std::size_t dimension);

/// True iff the disks have a common point. Searches boundary poles of single
/// disks first, then of k-subsets for k = 2..min(m, d + 1); the first pole
/// contained in every disk is returned as witness.
CechDecision is_cech_system(const DiskSystem& system, const Tolerance& tol = {});

/// Bisection for the smallest lambda such that the rescaled system has a
/// common point, on [nu, sqrt(2d/(d+1)) nu]. Returns nu without bisecting
/// when the system rescaled by nu already intersects.
ScaleReport cech_scale(const DiskSystem& system, double eta = kDefaultEta, const Tolerance& tol = {});

}  // namespace cechkit
