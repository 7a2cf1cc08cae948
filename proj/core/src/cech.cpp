#include "cechkit/cech.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pole_enumeration.hpp"

namespace cechkit {

double rips_scale(const DiskSystem& system) {
  double scale = 0.0;
  for (std::size_t i = 0; i < system.size(); ++i) {
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      const double distance = (system[i].center() - system[j].center()).norm();
      scale = std::max(scale, distance / (system[i].radius() + system[j].radius()));
    }
  }
  return scale;
}

DiskSystem rescale(const DiskSystem& system, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("rescale factor must be positive and finite");
  std::vector<Disk> scaled;
  scaled.reserve(system.size());
  for (const auto& disk : system) scaled.emplace_back(disk.center(), lambda * disk.radius());
  return DiskSystem(std::move(scaled));
}

double rips_to_cech_bound(std::size_t dimension) {
  const auto d = static_cast<double>(dimension);
  return std::sqrt(2.0 * d / (d + 1.0));
}

CechDecision is_cech_system(const DiskSystem& system, const Tolerance& tol) {
  CechDecision decision;
  if (system.size() == 1) {
    decision.is_cech = true;
    decision.witness = system[0].center();
    decision.generating_subset = {0};
    return decision;
  }

  const auto stats = detail::enumerate_poles(system, tol, [&](const detail::Candidate& c) {
    if (!detail::in_all(system, c.point, tol)) return false;
    decision.is_cech = true;
    decision.witness = c.point;
    decision.generating_subset.assign(c.subset.begin(), c.subset.end());
    return true;
  });
  decision.degenerate_subsets = stats.degenerate_subsets;
  return decision;
}

ScaleReport cech_scale(const DiskSystem& system, double eta, const Tolerance& tol) {
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");

  ScaleReport report;
  report.eta = eta;
  report.rips_scale = rips_scale(system);
  const double nu = report.rips_scale;

  // All centers coincide: the common center is in every rescaled system.
  if (nu == 0.0) {
    report.witness = system[0].center();
    return report;
  }

  const auto at_nu = is_cech_system(rescale(system, nu), tol);
  report.degenerate = at_nu.degenerate();
  if (at_nu.is_cech) {
    report.cech_scale = nu;
    report.bracket = {nu, nu};
    report.witness = at_nu.witness;
    return report;
  }

  double lower = nu;
  double upper = rips_to_cech_bound(system.dimension()) * nu;
  while (upper - lower > eta) {
    const double mid = 0.5 * (lower + upper);
    const auto decision = is_cech_system(rescale(system, mid), tol);
    report.degenerate = report.degenerate || decision.degenerate();
    if (decision.is_cech) {
      upper = mid;
      report.witness = decision.witness;
    } else {
      lower = mid;
    }
    ++report.iterations;
  }

  if (!report.witness) {
    const auto decision = is_cech_system(rescale(system, upper), tol);
    report.degenerate = report.degenerate || decision.degenerate();
    report.witness = decision.witness;
  }
  report.cech_scale = upper;
  report.bracket = {lower, upper};
  return report;
}

}  // namespace cechkit
