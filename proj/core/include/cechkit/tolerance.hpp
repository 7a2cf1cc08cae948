#pragma once

#include <cmath>

namespace cechkit {

/// Absolute-plus-relative tolerance used by every membership and on-sphere
/// test: a quantity of magnitude s is compared with slack eps * (1 + |s|).
struct Tolerance {
  double eps = 1e-9;

  double at(double scale) const noexcept { return eps * (1.0 + std::abs(scale)); }
};

}  // namespace cechkit
