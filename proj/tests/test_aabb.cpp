#include <cmath>
#include <limits>
#include <variant>

#include <gtest/gtest.h>

#include "cechkit/aabb.hpp"
#include "cechkit/oracle.hpp"
#include "support.hpp"

namespace cechkit {
namespace {

using testing::disk;
using testing::Generator;
using testing::vec;

const double kSqrt2 = std::sqrt(2.0);

void expect_box_near(const Box& actual, const std::vector<Interval>& expected, double tol) {
  ASSERT_EQ(actual.dimension(), expected.size());
  for (std::size_t q = 0; q < expected.size(); ++q) {
    EXPECT_NEAR(actual[q].lower, expected[q].lower, tol) << "axis " << q;
    EXPECT_NEAR(actual[q].upper, expected[q].upper, tol) << "axis " << q;
  }
}

std::vector<Box> leave_one_out_boxes(const DiskSystem& system) {
  std::vector<Box> boxes;
  for (std::size_t j = 0; j < system.size(); ++j) {
    const auto box = aabb_minimal(testing::leave_one_out(system, j));
    if (!box) return {};
    boxes.push_back(*box);
  }
  return boxes;
}

// --- Box ---------------------------------------------------------------------------

TEST(Box, States) {
  const Box proper({{0, 1}, {2, 3}});
  EXPECT_TRUE(proper.proper());
  EXPECT_FALSE(proper.degenerate());
  const Box flat({{0, 1}, {2, 2}});
  EXPECT_TRUE(flat.degenerate());
  const Box inverted({{2, 1}, {0, 1}});
  EXPECT_TRUE(inverted.inverted());
  EXPECT_FALSE(inverted.degenerate());
  EXPECT_THROW(Box({}), std::invalid_argument);
}

TEST(Box, ContainsAndEncloses) {
  const Box box({{0, 1}, {0, 1}});
  EXPECT_TRUE(box.contains(vec({1, 0.5})));
  EXPECT_FALSE(box.contains(vec({1.1, 0.5})));
  EXPECT_TRUE(box.contains(vec({1.1, 0.5}), 0.2));
  EXPECT_TRUE(box.encloses(Box({{0.2, 0.4}, {0, 1}})));
  EXPECT_FALSE(box.encloses(Box({{-0.1, 0.4}, {0, 1}})));
  EXPECT_THROW(box.contains(vec({0, 0, 0})), DimensionMismatch);
}

// --- aabb_two_disks ------------------------------------------------------------------

TEST(AabbTwoDisks, OverlappingUnitDisks) {
  const auto box = aabb_two_disks(disk({0, 0}, 1), disk({1, 0}, 1));
  ASSERT_TRUE(box.has_value());
  expect_box_near(*box, {{0, 1}, {-std::sqrt(3.0) / 2, std::sqrt(3.0) / 2}}, 1e-12);
}

TEST(AabbTwoDisks, SeparatedDisks) { EXPECT_FALSE(aabb_two_disks(disk({0, 0}, 1), disk({5, 0}, 1)).has_value()); }

TEST(AabbTwoDisks, TangentTripleLens) {
  const auto box = aabb_two_disks(disk({4, 1, 0}, kSqrt2), disk({4, -1, 0}, kSqrt2));
  ASSERT_TRUE(box.has_value());
  expect_box_near(*box, {{3, 5}, {1 - kSqrt2, kSqrt2 - 1}, {-1, 1}}, 1e-12);
  const auto oracle = oracle_aabb(DiskSystem({disk({4, 1, 0}, kSqrt2), disk({4, -1, 0}, kSqrt2)}));
  ASSERT_TRUE(oracle.has_value());
  expect_box_near(*box, {oracle->intervals().begin(), oracle->intervals().end()}, 1e-3);
}

TEST(AabbTwoDisks, NestedAndIdenticalDisks) {
  auto box = aabb_two_disks(disk({0, 0}, 3), disk({1, 0}, 1));
  ASSERT_TRUE(box.has_value());
  expect_box_near(*box, {{0, 2}, {-1, 1}}, 1e-15);
  box = aabb_two_disks(disk({1, 1}, 2), disk({1, 1}, 2));
  ASSERT_TRUE(box.has_value());
  expect_box_near(*box, {{-1, 3}, {-1, 3}}, 1e-15);
}

TEST(AabbTwoDisks, TangentDisksGiveAPoint) {
  const auto box = aabb_two_disks(disk({0, 0}, 1), disk({2, 0}, 1));
  ASSERT_TRUE(box.has_value());
  expect_box_near(*box, {{1, 1}, {0, 0}}, 1e-9);
}

TEST(AabbTwoDisks, MatchesMinimalBox) {
  Generator gen(31);
  int compared = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t d = gen.integer(2, 4);
    const DiskSystem system({Disk(gen.point(d), gen.uniform(0.1, 1.0)), Disk(gen.point(d), gen.uniform(0.1, 1.0))});
    const auto closed = aabb_two_disks(system[0], system[1]);
    const auto general = aabb_minimal(system);
    ASSERT_EQ(closed.has_value(), general.has_value());
    if (!closed) continue;
    ++compared;
    expect_box_near(*closed, {general->intervals().begin(), general->intervals().end()}, 1e-9);
  }
  EXPECT_GT(compared, 200);
}

// --- aabb_minimal ----------------------------------------------------------------------

TEST(AabbMinimal, TangentTripleIsThePointP) {
  const auto box = aabb_minimal(testing::tangent_triple());
  ASSERT_TRUE(box.has_value());
  expect_box_near(*box, {{3, 3}, {0, 0}, {0, 0}}, 1e-6);
  EXPECT_TRUE(box->degenerate(1e-6));
}

TEST(AabbMinimal, EmptyQuadrupleIsEmpty) { EXPECT_FALSE(aabb_minimal(testing::empty_quadruple()).has_value()); }

TEST(AabbMinimal, SingleDisk) {
  const auto box = aabb_minimal(DiskSystem({disk({1, 2}, 3)}));
  ASSERT_TRUE(box.has_value());
  expect_box_near(*box, {{-2, 4}, {-1, 5}}, 0.0);
}

TEST(AabbMinimal, ReuleauxTriangle) {
  // Unit radii: a Reuleaux triangle on the three centers.
  const auto box = aabb_minimal(testing::equilateral_triangle());
  ASSERT_TRUE(box.has_value());
  const double h = std::sqrt(3.0) / 2.0;
  expect_box_near(*box, {{0, 1}, {h - 1, h}}, 1e-12);
}

TEST(AabbMinimal, AgreesWithOracleBox) {
  Generator gen(32);
  int compared = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = trial < 30 ? 2 : 3;
    const auto system = testing::rips_system(gen, d, gen.integer(2, 4));
    const auto oracle_check = oracle_intersects(system);
    if (oracle_check.indeterminate) continue;
    const auto box = aabb_minimal(system);
    ASSERT_EQ(box.has_value(), oracle_check.intersects) << "trial " << trial;
    if (!box) continue;
    const auto oracle = oracle_aabb(system);
    ASSERT_TRUE(oracle.has_value());
    expect_box_near(*box, {oracle->intervals().begin(), oracle->intervals().end()}, 1e-6);
    ++compared;
  }
  EXPECT_GT(compared, 10);
}

// --- box_intersect -----------------------------------------------------------------------

TEST(BoxIntersect, Examples) {
  const Box a({{0, 1}, {0, 1}});
  const Box b({{2, 3}, {0, 1}});
  const std::vector<Box> same{a, a};
  EXPECT_EQ(box_intersect(same), a);
  const std::vector<Box> disjoint{a, b};
  const Box inverted = box_intersect(disjoint);
  EXPECT_EQ(inverted, Box({{2, 1}, {0, 1}}));
  EXPECT_TRUE(inverted.inverted());
  EXPECT_THROW(box_intersect(std::vector<Box>{}), std::invalid_argument);
  const std::vector<Box> mixed{a, Box({{0, 1}})};
  EXPECT_THROW(box_intersect(mixed), DimensionMismatch);
}

TEST(BoxIntersect, PairwiseBoxesOverestimateTangentTriple) {
  const auto system = testing::tangent_triple();
  std::vector<Box> pairwise;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) pairwise.push_back(*aabb_two_disks(system[i], system[j]));
  const Box combined = box_intersect(pairwise);
  // The x and y extents collapse onto P, the z extent does not.
  EXPECT_NEAR(combined[0].lower, 3.0, 1e-12);
  EXPECT_NEAR(combined[0].upper, 3.0, 1e-12);
  EXPECT_NEAR(combined[1].lower, 0.0, 1e-12);
  EXPECT_NEAR(combined[1].upper, 0.0, 1e-12);
  EXPECT_LT(combined[2].lower, -0.7);
  EXPECT_GT(combined[2].upper, 0.7);
}

// Pairwise boxes of empty_quadruple computed independently with a convex
// solver (rounded to 1e-4), and their intersection.
TEST(BoxIntersect, PairwiseBoxesOfEmptyQuadruple) {
  const auto system = testing::empty_quadruple();
  const std::vector<std::vector<Interval>> expected{
      {{3, 5}, {-0.4142, 0.4142}, {-1, 1}},
      {{2.5858, 3.1623}, {0, 2}, {-1, 1}},
      {{2.7033, 3.9}, {-0.2967, 0.9}, {0.1, 1.2967}},
      {{2.6, 3}, {-0.8, 0}, {-0.4472, 0.4472}},
      {{2.7033, 3.9}, {-0.9, 0.2967}, {0.1, 1.2967}},
      {{2.1, 3.1189}, {-0.7355, 0.9}, {0.1, 1.7355}},
  };
  std::vector<Box> pairwise;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto box = aabb_two_disks(system[i], system[j]);
      ASSERT_TRUE(box.has_value());
      expect_box_near(*box, expected[pairwise.size()], 1e-4);
      pairwise.push_back(*box);
    }
  }
  expect_box_near(box_intersect(pairwise), {{3, 3}, {0, 0}, {0.1, 0.4472}}, 1e-4);
}

// --- properties --------------------------------------------------------------------------

TEST(AabbProperties, SamplesLieInsideTheBox) {
  Generator gen(33);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 30; ++trial) {
    const std::size_t d = gen.integer(2, 3);
    const auto system = testing::rips_system(gen, d, gen.integer(2, 5));
    const auto box = aabb_minimal(system);
    const auto oracle = oracle_intersects(system);
    if (oracle.indeterminate || !oracle.intersects) continue;
    ASSERT_TRUE(box.has_value());
    const auto samples = oracle_sample(system, 10000, 1000 + trial);
    if (samples.size() < 100) continue;
    ++checked;
    for (const auto& p : samples) ASSERT_TRUE(box->contains(p, 1e-8)) << "trial " << trial;
  }
  EXPECT_EQ(checked, 30);
}

TEST(AabbProperties, EveryFaceIsTouchedByARetainedPole) {
  Generator gen(34);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = gen.integer(2, 3);
    const auto system = testing::rips_system(gen, d, gen.integer(2, 5));
    const auto box = aabb_minimal(system);
    if (!box) continue;
    const auto poles = retained_poles(system);
    for (std::size_t q = 0; q < d; ++q) {
      bool low = false, high = false;
      for (const auto& pole : poles) {
        if (pole.axis != q) continue;
        const double x = pole.point[static_cast<Eigen::Index>(q)];
        low = low || (pole.orientation == Orientation::south && x == (*box)[q].lower);
        high = high || (pole.orientation == Orientation::north && x == (*box)[q].upper);
      }
      EXPECT_TRUE(low && high) << "trial " << trial << " axis " << q;
    }
  }
}

TEST(AabbProperties, HellyEquality) {
  Generator gen(35);
  int checked = 0;
  while (checked < 60) {
    const std::size_t d = gen.integer(2, 3);
    const auto system = testing::rips_system(gen, d, d + 1);
    const auto box = aabb_minimal(system);
    if (!box) continue;
    const auto boxes = leave_one_out_boxes(system);
    ASSERT_EQ(boxes.size(), system.size());
    expect_box_near(box_intersect(boxes), {box->intervals().begin(), box->intervals().end()}, 1e-8);
    ++checked;
  }
}

TEST(AabbProperties, EmptyRipsSystemsInvertTheLeaveOneOutBoxes) {
  Generator gen(36);
  int checked = 0;
  while (checked < 60) {
    const std::size_t d = gen.integer(2, 3);
    const auto system = testing::rips_system(gen, d, d + 1);
    if (aabb_minimal(system)) continue;
    const auto boxes = leave_one_out_boxes(system);
    if (boxes.empty()) continue;
    EXPECT_TRUE(box_intersect(boxes).inverted());
    ++checked;
  }
}

TEST(AabbProperties, MoreDisksGiveASmallerBox) {
  Generator gen(37);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = gen.integer(2, 3);
    const auto larger = testing::rips_system(gen, d, gen.integer(3, 5));
    const auto smaller = testing::leave_one_out(larger, gen.integer(0, larger.size() - 1));
    const auto outer = aabb_minimal(smaller);
    const auto inner = aabb_minimal(larger);
    if (!inner) continue;
    ASSERT_TRUE(outer.has_value());
    EXPECT_TRUE(outer->encloses(*inner, 1e-9));
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

// Lower bound along `axis` of three disks by the case analysis: the lowest
// point of the intersection is the south pole of a single boundary, of a
// pairwise boundary circle, or of the triple boundary, whichever lies in all
// three disks and is lowest.
double three_disk_lower(const DiskSystem& system, std::size_t axis) {
  const auto q = static_cast<Eigen::Index>(axis);
  double best = std::numeric_limits<double>::infinity();
  const auto consider = [&](const Vector& p) {
    for (const auto& d : system)
      if (!contains(d, p, Tolerance{})) return;
    best = std::min(best, p[q]);
  };
  const auto consider_boundary = [&](const Intersection& boundary) {
    if (const auto* sphere = std::get_if<ISphere>(&boundary)) {
      consider(sphere->normals.cols() == 1 ? poles_codim1(*sphere, axis).south.point
                                            : poles_general(*sphere, axis).south.point);
    } else if (const auto* point = std::get_if<SinglePoint>(&boundary)) {
      consider(point->point);
    }
  };
  for (const auto& d : system) consider(boundary_poles(d, axis).south.point);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = j + 1; k < 3; ++k) consider_boundary(intersect_two_spheres(system[j], system[k]));
  consider_boundary(reduce_sphere_system(system.disks()));
  return best;
}

TEST(AabbProperties, ThreeDiskCaseAnalysisMatchesUniformPath) {
  Generator gen(38);
  int checked = 0;
  while (checked < 200) {
    const auto system = testing::rips_system(gen, 3, 3);
    const auto box = aabb_minimal(system);
    if (!box) continue;
    for (std::size_t q = 0; q < 3; ++q) EXPECT_NEAR(three_disk_lower(system, q), (*box)[q].lower, 1e-9);
    ++checked;
  }
}

}  // namespace
}  // namespace cechkit
