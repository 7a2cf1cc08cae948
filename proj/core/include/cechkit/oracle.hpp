#pragma once

// Brute-force ground truth for tests: grid refinement of the convex function
// f(x) = max_i ||x - c_i|| / r_i, whose minimum is the Čech scale. Coordinates
// are refined one at a time, nested, so a narrow valley cannot hide the
// minimizer. Independent of the pole machinery. Cost grows as
// (grid * rounds)^d; meant for d <= 3.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cechkit/aabb.hpp"
#include "cechkit/types.hpp"

namespace cechkit {

struct OracleConfig {
  std::size_t initial_grid = 16;  // points per axis per round
  std::size_t refinement_rounds = 12;
};

struct MinimaxResult {
  double value = 0.0;
  Vector argmin;
  double step = 0.0;   // final grid spacing (largest over axes)
  double slack = 0.0;  // declared error bound: max(1/r_i) * step * sqrt(d)
  std::vector<double> round_values;  // best value after each round
};

struct OracleDecision {
  bool intersects = false;     // value <= 1 + slack
  bool indeterminate = false;  // |value - 1| <= slack
  double value = 0.0;
  double slack = 0.0;
};

MinimaxResult oracle_minimax(const DiskSystem& system, const OracleConfig& config = {});

OracleDecision oracle_intersects(const DiskSystem& system, const OracleConfig& config = {});

/// Per-axis extremes of the intersection, each found by bisecting on the
/// slice coordinate with a (d-1)-dimensional minimax deciding whether the
/// slice meets every disk. nullopt when the minimax exceeds 1 + slack.
std::optional<Box> oracle_aabb(const DiskSystem& system, const OracleConfig& config = {});

/// Up to `count` points drawn uniformly from the intersection by rejection
/// from the smallest disk.
std::vector<Vector> oracle_sample(const DiskSystem& system, std::size_t count, std::uint64_t seed,
                                  std::size_t max_attempts = 2'000'000);

}  // namespace cechkit
