#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cechkit/aabb.hpp"
#include "cechkit/geometry.hpp"

namespace cechkit::cli {

/// SVG 1.1 drawing of a planar disk system with its retained poles and the
/// box of the intersection. Requires dimension 2.
std::string render_svg(const DiskSystem& system, const std::vector<Pole>& poles,
                       const std::optional<Box>& box);

}  // namespace cechkit::cli
