#include "cechkit/filtration.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cechkit/geometry.hpp"
#include "pole_enumeration.hpp"

namespace cechkit {
namespace {

struct SubsetScale {
  double scale = 0.0;
  bool degenerate = false;
};

SubsetScale subset_scale(const DiskSystem& system, std::span<const std::size_t> vertices,
                         const FiltrationOptions& options) {
  if (vertices.size() == 1) return {};
  const DiskSystem sub = system.subsystem(vertices);
  if (vertices.size() == 2) return {rips_scale(sub), false};
  const ScaleReport report = cech_scale(sub, options.eta, options.tol);
  return {report.cech_scale, report.degenerate};
}

}  // namespace

Filtration build_filtration(const DiskSystem& input, const FiltrationOptions& options) {
  if (!(options.eta > 0.0)) throw std::invalid_argument("eta must be positive");
  if (options.max_dimension + 1 > input.size())
    throw std::invalid_argument("max_dimension must be at most m - 1");

  Reduction reduced{input, {}};
  if (options.deduplicate) {
    reduced = deduplicate(input, options.tol);
  } else {
    reduced.index_map.resize(input.size());
    std::iota(reduced.index_map.begin(), reduced.index_map.end(), std::size_t{0});
  }
  const DiskSystem& system = reduced.system;
  const std::size_t m = system.size();
  const std::size_t max_dim = std::min(options.max_dimension, m - 1);

  Filtration filtration;
  filtration.max_dimension = max_dim;
  filtration.index_map = std::move(reduced.index_map);

  for (std::size_t k = 1; k <= max_dim + 1; ++k) {
    detail::for_each_combination(m, k, [&](std::span<const std::size_t> subset) {
      filtration.simplices.push_back({{subset.begin(), subset.end()}, 0.0});
      return false;
    });
  }

  // Subsets are independent; results land in their own slots.
  std::vector<SubsetScale> scales(filtration.simplices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < scales.size(); i = next++)
      scales[i] = subset_scale(system, filtration.simplices[i].vertices, options);
  };
  const unsigned threads =
      std::max(1u, options.threads != 0 ? options.threads : std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  // Simplices were generated by increasing size, so facets are final before
  // their cofaces are clamped.
  std::map<std::vector<std::size_t>, double> entered;
  for (std::size_t i = 0; i < filtration.simplices.size(); ++i) {
    auto& simplex = filtration.simplices[i];
    simplex.scale = scales[i].scale;
    filtration.degenerate = filtration.degenerate || scales[i].degenerate;
    if (simplex.vertices.size() > 1) {
      for (std::size_t drop = 0; drop < simplex.vertices.size(); ++drop) {
        std::vector<std::size_t> facet;
        facet.reserve(simplex.vertices.size() - 1);
        for (std::size_t j = 0; j < simplex.vertices.size(); ++j)
          if (j != drop) facet.push_back(simplex.vertices[j]);
        simplex.scale = std::max(simplex.scale, entered.at(facet));
      }
    }
    entered.emplace(simplex.vertices, simplex.scale);
  }

  std::stable_sort(filtration.simplices.begin(), filtration.simplices.end(),
                   [](const WeightedSimplex& a, const WeightedSimplex& b) {
                     if (a.scale != b.scale) return a.scale < b.scale;
                     if (a.vertices.size() != b.vertices.size())
                       return a.vertices.size() < b.vertices.size();
                     return a.vertices < b.vertices;
                   });
  return filtration;
}

}  // namespace cechkit
