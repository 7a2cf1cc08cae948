#include "cechkit/types.hpp"

#include <cmath>
#include <string>

namespace cechkit {

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : GeometryError("dimension mismatch: expected " + std::to_string(expected) + ", got " +
                    std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

DegenerateConfiguration::DegenerateConfiguration(std::size_t rank, std::size_t expected_rank)
    : GeometryError("affinely dependent centers: rank " + std::to_string(rank) + " of " +
                    std::to_string(expected_rank)),
      rank_(rank),
      expected_rank_(expected_rank) {}

CoincidentSpheres::CoincidentSpheres()
    : GeometryError("coincident spheres: identical disks must be merged") {}

Disk::Disk(Vector center, double radius) : center_(std::move(center)), radius_(radius) {
  if (center_.size() == 0) throw std::invalid_argument("disk center must have dimension >= 1");
  if (!(radius_ > 0.0) || !std::isfinite(radius_))
    throw std::invalid_argument("disk radius must be positive and finite");
  if (!center_.allFinite()) throw std::invalid_argument("disk center must be finite");
}

DiskSystem::DiskSystem(std::vector<Disk> disks) : disks_(std::move(disks)), dimension_(0) {
  if (disks_.empty()) throw std::invalid_argument("disk system must contain at least one disk");
  dimension_ = disks_.front().dimension();
  for (const auto& disk : disks_) {
    if (disk.dimension() != dimension_) throw DimensionMismatch(dimension_, disk.dimension());
  }
}

DiskSystem DiskSystem::subsystem(std::span<const std::size_t> indices) const {
  std::vector<Disk> picked;
  picked.reserve(indices.size());
  for (auto i : indices) picked.push_back(disks_.at(i));
  return DiskSystem(std::move(picked));
}

}  // namespace cechkit
