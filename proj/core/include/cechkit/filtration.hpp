#pragma once

// Filtered generalized Čech complex: every simplex enters at the Čech scale
// of the disks it spans.

#include <cstddef>
#include <vector>

#include "cechkit/cech.hpp"
#include "cechkit/tolerance.hpp"
#include "cechkit/types.hpp"

namespace cechkit {

struct WeightedSimplex {
  std::vector<std::size_t> vertices;  // sorted
  double scale = 0.0;

  std::size_t dimension() const noexcept { return vertices.size() - 1; }
};

struct Filtration {
  // Sorted by (scale, dimension, vertices).
  std::vector<WeightedSimplex> simplices;
  std::size_t max_dimension = 0;
  // Vertex index -> index in the input system (identity unless duplicates
  // were removed).
  std::vector<std::size_t> index_map;
  bool degenerate = false;
};

struct FiltrationOptions {
  std::size_t max_dimension = 2;
  double eta = kDefaultEta;
  bool deduplicate = true;
  Tolerance tol{};
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Vertices at 0, edges at their Vietoris-Rips scale (exact for two disks),
/// higher simplices at the bisected Čech scale of their sub-system, clamped
/// so no simplex precedes one of its facets.
/// Requires max_dimension <= m - 1 and eta > 0.
Filtration build_filtration(const DiskSystem& system, const FiltrationOptions& options = {});

}  // namespace cechkit
