#include "cechkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace cechkit {
namespace {

struct GridResult {
  double value = std::numeric_limits<double>::infinity();
  Vector argmin;
  double step = 0.0;
  std::vector<double> history;
};

// Minimizes a convex f over the box [lo, hi] one coordinate at a time: the
// outer coordinate sees the minimum over the remaining ones, which is again
// convex. Each round samples a 1D grid over the current bracket and shrinks
// it to the two cells around the best sample, which still hold a minimizer.
class NestedGrid {
 public:
  NestedGrid(const std::function<double(const Vector&)>& f, Vector lo, Vector hi, const OracleConfig& config)
      : f_(f), lo_(std::move(lo)), hi_(std::move(hi)), config_(config), x_(lo_.size()) {
    if (config.initial_grid < 2 || config.refinement_rounds == 0)
      throw std::invalid_argument("oracle config: grid >= 2, rounds >= 1");
  }

  GridResult run() {
    GridResult result;
    result.value = minimize(0, &result.history);
    result.argmin = best_;
    result.step = step_;
    return result;
  }

 private:
  // Minimum over coordinates axis.. with the earlier ones fixed in x_.
  double minimize(Eigen::Index axis, std::vector<double>* history) {
    if (axis == x_.size()) {
      const double value = f_(x_);
      if (value < best_value_) {
        best_value_ = value;
        best_ = x_;
      }
      return value;
    }
    const auto points = static_cast<Eigen::Index>(config_.initial_grid);
    double a = lo_[axis], b = hi_[axis];
    double best_value = std::numeric_limits<double>::infinity(), best_t = a, h = 0.0;
    for (std::size_t round = 0; round < config_.refinement_rounds; ++round) {
      h = (b - a) / static_cast<double>(points - 1);
      for (Eigen::Index i = 0; i < points; ++i) {
        const double t = i + 1 == points ? b : a + static_cast<double>(i) * h;
        x_[axis] = t;
        const double value = minimize(axis + 1, nullptr);
        if (value < best_value) {
          best_value = value;
          best_t = t;
        }
      }
      if (history) history->push_back(best_value);
      a = std::max(a, best_t - h);
      b = std::min(b, best_t + h);
    }
    x_[axis] = best_t;
    step_ = std::max(step_, h);
    return best_value;
  }

  const std::function<double(const Vector&)>& f_;
  Vector lo_, hi_;
  const OracleConfig& config_;
  Vector x_;
  Vector best_;
  double best_value_ = std::numeric_limits<double>::infinity();
  double step_ = 0.0;
};

GridResult grid_minimize(const std::function<double(const Vector&)>& f, const Vector& lo, const Vector& hi,
                         const OracleConfig& config) {
  if (lo.size() == 0) {
    if (config.initial_grid < 2 || config.refinement_rounds == 0)
      throw std::invalid_argument("oracle config: grid >= 2, rounds >= 1");
    GridResult result;
    result.argmin = lo;
    result.value = f(lo);
    result.history.assign(config.refinement_rounds, result.value);
    return result;
  }
  return NestedGrid(f, lo, hi, config).run();
}

double max_normalized_distance(const DiskSystem& system, const Vector& x) {
  double worst = 0.0;
  for (const auto& disk : system) worst = std::max(worst, (x - disk.center()).norm() / disk.radius());
  return worst;
}

double lipschitz(const DiskSystem& system) {
  double min_radius = std::numeric_limits<double>::infinity();
  for (const auto& disk : system) min_radius = std::min(min_radius, disk.radius());
  return 1.0 / min_radius;
}

std::pair<Vector, Vector> disk_bounds(const DiskSystem& system) {
  const auto d = static_cast<Eigen::Index>(system.dimension());
  Vector lo = Vector::Constant(d, std::numeric_limits<double>::infinity());
  Vector hi = -lo;
  for (const auto& disk : system) {
    lo = lo.cwiseMin(disk.center() - Vector::Constant(d, disk.radius()));
    hi = hi.cwiseMax(disk.center() + Vector::Constant(d, disk.radius()));
  }
  return {lo, hi};
}

Vector drop_axis(const Vector& v, Eigen::Index axis) {
  Vector out(v.size() - 1);
  for (Eigen::Index i = 0, j = 0; i < v.size(); ++i)
    if (i != axis) out[j++] = v[i];
  return out;
}

}  // namespace

MinimaxResult oracle_minimax(const DiskSystem& system, const OracleConfig& config) {
  auto [lo, hi] = disk_bounds(system);
  const GridResult grid = grid_minimize(
      [&](const Vector& x) { return max_normalized_distance(system, x); }, lo, hi, config);

  MinimaxResult result;
  result.value = grid.value;
  result.argmin = grid.argmin;
  result.step = grid.step;
  result.slack = lipschitz(system) * grid.step * std::sqrt(static_cast<double>(system.dimension()));
  result.round_values = grid.history;
  return result;
}

OracleDecision oracle_intersects(const DiskSystem& system, const OracleConfig& config) {
  const MinimaxResult minimax = oracle_minimax(system, config);
  return {minimax.value <= 1.0 + minimax.slack, std::abs(minimax.value - 1.0) <= minimax.slack,
          minimax.value, minimax.slack};
}

std::optional<Box> oracle_aabb(const DiskSystem& system, const OracleConfig& config) {
  const MinimaxResult minimax = oracle_minimax(system, config);
  if (minimax.value > 1.0 + minimax.slack) return std::nullopt;

  const auto d = static_cast<Eigen::Index>(system.dimension());
  const auto [lo, hi] = disk_bounds(system);
  const double lip = lipschitz(system);

  std::vector<Interval> intervals(static_cast<std::size_t>(d));
  for (Eigen::Index q = 0; q < d; ++q) {
    const Vector slice_lo = drop_axis(lo, q);
    const Vector slice_hi = drop_axis(hi, q);

    // Whether the hyperplane x_q = t meets every disk, up to the slice
    // minimax's own slack.
    auto slice_feasible = [&](double t) {
      const GridResult slice = grid_minimize(
          [&](const Vector& y) {
            Vector x(d);
            for (Eigen::Index i = 0, j = 0; i < d; ++i) x[i] = i == q ? t : y[j++];
            return max_normalized_distance(system, x);
          },
          slice_lo, slice_hi, config);
      const double slack = lip * slice.step * std::sqrt(static_cast<double>(d - 1));
      return slice.value <= 1.0 + slack;
    };

    double reach_lo = -std::numeric_limits<double>::infinity();
    double reach_hi = std::numeric_limits<double>::infinity();
    for (const auto& disk : system) {
      reach_lo = std::max(reach_lo, disk.center()[q] - disk.radius());
      reach_hi = std::min(reach_hi, disk.center()[q] + disk.radius());
    }

    // Bisect between a feasible anchor and a bound no feasible point passes.
    auto extreme = [&](double infeasible, double feasible) {
      for (int i = 0; i < 60 && std::abs(feasible - infeasible) > 1e-12 * (1.0 + std::abs(feasible)); ++i) {
        const double mid = 0.5 * (infeasible + feasible);
        (slice_feasible(mid) ? feasible : infeasible) = mid;
      }
      return feasible;
    };
    const double anchor = std::clamp(minimax.argmin[q], reach_lo, std::max(reach_lo, reach_hi));
    intervals[static_cast<std::size_t>(q)] = {extreme(reach_lo, anchor), extreme(reach_hi, anchor)};
  }
  return Box(std::move(intervals));
}

std::vector<Vector> oracle_sample(const DiskSystem& system, std::size_t count, std::uint64_t seed,
                                  std::size_t max_attempts) {
  const Disk* smallest = &system[0];
  for (const auto& disk : system)
    if (disk.radius() < smallest->radius()) smallest = &disk;

  const auto d = static_cast<Eigen::Index>(system.dimension());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> uniform;

  std::vector<Vector> samples;
  Vector direction(d);
  for (std::size_t attempt = 0; attempt < max_attempts && samples.size() < count; ++attempt) {
    for (Eigen::Index i = 0; i < d; ++i) direction[i] = gauss(rng);
    const double radius = smallest->radius() * std::pow(uniform(rng), 1.0 / static_cast<double>(d));
    const Vector p = smallest->center() + (radius / direction.norm()) * direction;
    const bool inside = std::all_of(system.begin(), system.end(), [&](const Disk& disk) {
      return (p - disk.center()).norm() <= disk.radius();
    });
    if (inside) samples.push_back(p);
  }
  return samples;
}

}  // namespace cechkit
