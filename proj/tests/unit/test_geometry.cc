#include <gtest/gtest.h>

#include <random>

#include "circpack/geometry.h"
#include "circpack/rational.h"
#include "support/test_util.h"

using namespace circpack;
using circpack::testing::Q;
using circpack::testing::random_rational;

TEST(Rational, ParsesDecimalAndFractionForms) {
  EXPECT_EQ(parse_rational("3/4"), Q(3, 4));
  EXPECT_EQ(parse_rational("6/8"), Q(3, 4));
  EXPECT_EQ(parse_rational("0.25"), Q(1, 4));
  EXPECT_EQ(parse_rational("-1.5e-1"), Q(-3, 20));
  EXPECT_EQ(parse_rational(" 7 "), Q(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, SerializesAsNumeratorOverDenominator) {
  EXPECT_EQ(to_string(Q(6, 8)), "3/4");
  EXPECT_EQ(to_string(Q(2)), "2/1");
  EXPECT_EQ(to_string(Q(-1, 3)), "-1/3");
  EXPECT_EQ(parse_rational(to_string(Q(-22, 7))), Q(-22, 7));
}

TEST(Rational, PiSandwich) {
  EXPECT_EQ(pi_lower(), Q(333, 106));
  EXPECT_EQ(pi_upper(), Q(355, 113));
  EXPECT_LT(pi_lower().get_d(), 3.14159265358979);
  EXPECT_GT(pi_upper().get_d(), 3.14159265358979);
}

TEST(Rational, RootBoundsBracketAndAreTight) {
  const Rational two(2);
  const Rational up = sqrt_upper(two);
  const Rational lo = sqrt_lower(two);
  EXPECT_GE(up * up, two);
  EXPECT_LE(lo * lo, two);
  EXPECT_LE(up - lo, Q(1, 1L << 31));
  EXPECT_EQ(sqrt_upper(Q(9, 4)), Q(3, 2));
  Rational exact;
  EXPECT_TRUE(exact_sqrt(Q(1, 100), exact));
  EXPECT_EQ(exact, Q(1, 10));
  EXPECT_FALSE(exact_sqrt(Q(1, 2), exact));
  const Rational cube = root_upper(Q(3), 3);
  EXPECT_GE(cube * cube * cube, Q(3));
}

TEST(Rational, FloorCeilAndSteps) {
  EXPECT_EQ(floor_of(Q(-1, 2)), BigInt(-1));
  EXPECT_EQ(ceil_of(Q(-1, 2)), BigInt(0));
  EXPECT_EQ(floor_to_step(Q(7, 10), Q(1, 4)), Q(1, 2));
  EXPECT_EQ(ceil_to_step(Q(7, 10), Q(1, 4)), Q(3, 4));
  EXPECT_EQ(dyadic_step_below(Q(1, 10)), Q(1, 16));
  EXPECT_EQ(dyadic_step_below(Q(1, 8)), Q(1, 8));
  EXPECT_EQ(pow(Q(2, 3), 3), Q(8, 27));
}

TEST(Geometry, DistSqExamples) {
  EXPECT_EQ(dist_sq({Q(0), Q(0)}, {Q(0), Q(0)}), Q(0));
  EXPECT_EQ(dist_sq({Q(0), Q(0)}, {Q(3), Q(4)}), Q(25));
  EXPECT_EQ(dist_sq({Q(1, 2), Q(1, 2)}, {Q(1, 4), Q(1, 4)}), Q(1, 8));
}

TEST(Geometry, DistSqSymmetricAndNonNegative) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100000; ++k) {
    const Point2 p{random_rational(rng, Q(-5), Q(5), 97), random_rational(rng, Q(-5), Q(5), 89)};
    const Point2 q{random_rational(rng, Q(-5), Q(5), 83), random_rational(rng, Q(-5), Q(5), 79)};
    const Rational d = dist_sq(p, q);
    ASSERT_EQ(d, dist_sq(q, p));
    ASSERT_GE(d, 0);
  }
}

TEST(Geometry, CircleRectRelationExamples) {
  const Point2 c{Q(1, 2), Q(1, 2)};
  EXPECT_EQ(circle_rect_relation(c, Q(1, 2), Rect{{Q(0), Q(0)}, Q(1, 4), Q(1, 4)}),
            CircleRectRelation::kPartialOverlap);
  EXPECT_EQ(circle_rect_relation(c, Q(1, 2), Rect{{Q(3, 8), Q(3, 8)}, Q(1, 4), Q(1, 4)}),
            CircleRectRelation::kCellInsideCircle);
  EXPECT_EQ(circle_rect_relation(c, Q(1, 4), Rect{{Q(7, 8), Q(7, 8)}, Q(1, 8), Q(1, 8)}),
            CircleRectRelation::kDisjoint);
}

TEST(Geometry, TangentCellIsDisjointFromOpenDisk) {
  // The cell touches the circle at a single point.
  EXPECT_EQ(circle_rect_relation({Q(0), Q(0)}, Q(1), Rect{{Q(1), Q(-1, 2)}, Q(1), Q(1)}),
            CircleRectRelation::kDisjoint);
  EXPECT_FALSE(disk_meets_rect({Q(0), Q(0)}, Q(1), Rect{{Q(1), Q(0)}, Q(1), Q(1)}));
  EXPECT_TRUE(rect_inside_disk({Q(0), Q(0)}, Q(1), Rect{{Q(0), Q(0)}, Q(3, 5), Q(4, 5)}));
}

// Monte-Carlo classifier: no sampled point may contradict the exact label.
TEST(Geometry, CircleRectRelationAgreesWithSampling) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const Point2 c{random_rational(rng, Q(0), Q(1), 64), random_rational(rng, Q(0), Q(1), 64)};
    const Rational r = random_rational(rng, Q(1, 64), Q(1, 2), 64);
    const Rect cell{{random_rational(rng, Q(0), Q(1), 32), random_rational(rng, Q(0), Q(1), 32)},
                    random_rational(rng, Q(1, 32), Q(1, 4), 32), random_rational(rng, Q(1, 32), Q(1, 4), 32)};
    const auto rel = circle_rect_relation(c, r, cell);
    const double cx = c.x.get_d(), cy = c.y.get_d(), rr = r.get_d();
    for (int s = 0; s < 64; ++s) {
      const double x = cell.origin.x.get_d() + u(rng) * cell.width.get_d();
      const double y = cell.origin.y.get_d() + u(rng) * cell.height.get_d();
      const double d = std::hypot(x - cx, y - cy);
      if (rel == CircleRectRelation::kDisjoint) ASSERT_GE(d, rr - 1e-12);
      if (rel == CircleRectRelation::kCellInsideCircle) ASSERT_LE(d, rr + 1e-12);
    }
  }
}

TEST(Geometry, DiskRowSpanMatchesCellByCellClassification) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Point2 c{random_rational(rng, Q(0), Q(1), 40), random_rational(rng, Q(0), Q(2), 40)};
    const Rational r = random_rational(rng, Q(1, 20), Q(1, 2), 40);
    const Rational x0 = random_rational(rng, Q(0), Q(1), 16);
    const Rational cw = Q(1, 16);
    const Rational ch = random_rational(rng, Q(1, 20), Q(1, 5), 20);
    const std::int64_t rows = 12;
    for (bool contained : {false, true}) {
      auto span = disk_row_span(c, r, x0, x0 + cw, Q(0), ch, rows, contained);
      for (std::int64_t row = 0; row < rows; ++row) {
        const Rect cell{{x0, Rational(row) * ch}, cw, ch};
        const bool expect = contained ? rect_inside_disk(c, r, cell) : disk_meets_rect(c, r, cell);
        const bool got = span && row >= span->first && row <= span->second;
        ASSERT_EQ(expect, got) << "row " << row << " contained " << contained;
      }
    }
  }
}
