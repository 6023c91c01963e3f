#include <gtest/gtest.h>

#include <random>

#include "circpack/geometry.h"
#include "circpack/lp_norm.h"
#include "support/test_util.h"

using namespace circpack;
using circpack::testing::Q;
using circpack::testing::random_rational;

TEST(LpNorm, DistanceExamples) {
  EXPECT_EQ(lp_distance_cmp({Q(0), Q(0)}, {Q(3), Q(4)}, WeightedNorm::finite(2, 1, {Q(1), Q(1)}), Q(5)),
            Ordering::kEqual);
  EXPECT_EQ(lp_distance_cmp({Q(0), Q(0)}, {Q(1), Q(1)}, WeightedNorm::finite(1, 1, {Q(1), Q(2)}), Q(3)),
            Ordering::kEqual);
  EXPECT_EQ(lp_distance_cmp({Q(0), Q(0)}, {Q(1, 2), Q(1, 4)}, WeightedNorm::infinity({Q(1), Q(1)}), Q(1, 2)),
            Ordering::kEqual);
}

TEST(LpNorm, RejectsInvalidNorms) {
  EXPECT_THROW(WeightedNorm::finite(1, 2, {Q(1)}).validate(), std::invalid_argument);
  EXPECT_THROW(WeightedNorm::finite(2, 1, {Q(1, 2)}).validate(), std::invalid_argument);
  EXPECT_THROW(WeightedNorm::finite(2, 1, {}).validate(), std::invalid_argument);
}

TEST(LpNorm, CellDiameterExamples) {
  const Rational l = Q(1, 7);
  const LpLength t = lp_cell_diameter(WeightedNorm::finite(2, 1, {Q(1), Q(1)}), l);
  EXPECT_EQ(t.integer_power_sum(), 2 * l * l);
  Rational v;
  ASSERT_TRUE(lp_cell_diameter(WeightedNorm::infinity({Q(1), Q(3)}), l).exact_value(v));
  EXPECT_EQ(v, 3 * l);
  for (auto norm : {WeightedNorm::finite(3, 2, {Q(1)}), WeightedNorm::finite(1, 1, {Q(1)}),
                    WeightedNorm::infinity({Q(1)})}) {
    EXPECT_EQ(compare(lp_cell_diameter(norm, l), l), Ordering::kEqual);
  }
}

TEST(LpNorm, EuclideanAgreesWithDistSq) {
  std::mt19937_64 rng(3);
  const WeightedNorm e = WeightedNorm::finite(2, 1, {Q(1), Q(1)});
  for (int k = 0; k < 5000; ++k) {
    const Point2 p{random_rational(rng, Q(-2), Q(2), 30), random_rational(rng, Q(-2), Q(2), 30)};
    const Point2 q{random_rational(rng, Q(-2), Q(2), 30), random_rational(rng, Q(-2), Q(2), 30)};
    const Rational r = random_rational(rng, Q(0), Q(3), 30);
    const Rational d = dist_sq(p, q);
    const Ordering want = d < r * r ? Ordering::kLess : (d == r * r ? Ordering::kEqual : Ordering::kGreater);
    ASSERT_EQ(lp_distance_cmp({p.x, p.y}, {q.x, q.y}, e, r), want);
  }
}

// ||x - z|| <= ||x - y|| + ||y - z||: for any probe radius at or above the
// right-hand side (bounded above numerically), the left side is not larger.
TEST(LpNorm, TriangleInequalityAtProbeRadii) {
  std::mt19937_64 rng(17);
  const std::vector<WeightedNorm> norms = {
      WeightedNorm::finite(1, 1, {Q(1), Q(2)}), WeightedNorm::finite(3, 2, {Q(1), Q(3, 2)}),
      WeightedNorm::finite(2, 1, {Q(2), Q(1)}), WeightedNorm::finite(3, 1, {Q(1), Q(1)}),
      WeightedNorm::infinity({Q(1), Q(5, 4)})};
  for (int k = 0; k < 2000; ++k) {
    const WeightedNorm& n = norms[k % norms.size()];
    PointD x{random_rational(rng, Q(-1), Q(1), 20), random_rational(rng, Q(-1), Q(1), 20)};
    PointD y{random_rational(rng, Q(-1), Q(1), 20), random_rational(rng, Q(-1), Q(1), 20)};
    PointD z{random_rational(rng, Q(-1), Q(1), 20), random_rational(rng, Q(-1), Q(1), 20)};
    Rational lo1, hi1, lo2, hi2;
    lp_length(x, y, n).bounds(40, lo1, hi1);
    lp_length(y, z, n).bounds(40, lo2, hi2);
    ASSERT_NE(lp_distance_cmp(x, z, n, hi1 + hi2), Ordering::kGreater);
  }
}

TEST(LpNorm, ShellClassifyExamples) {
  const WeightedNorm e = WeightedNorm::finite(2, 1, {Q(1), Q(1)});
  // Tiny cell straddling the unit circle near (3/5, 4/5).
  EXPECT_EQ(lp_shell_classify({Q(0), Q(0)}, Q(1), {Q(3, 5) - Q(1, 1000), Q(4, 5) - Q(1, 1000)}, Q(1, 500), e),
            ShellClass::kWithinShell);
  EXPECT_EQ(lp_shell_classify({Q(0), Q(0)}, Q(1), {Q(2), Q(2)}, Q(1, 100), e), ShellClass::kOutsideOuter);
  EXPECT_EQ(lp_shell_classify({Q(0), Q(0)}, Q(1), {Q(-1, 1000), Q(-1, 1000)}, Q(1, 500), e),
            ShellClass::kInsideInner);
  EXPECT_THROW(lp_shell_classify({Q(0), Q(0)}, Q(1, 100), {Q(0), Q(0)}, Q(1), e), ShellPreconditionError);
}

TEST(LpNorm, SqrtSumSign) {
  // 3 - sqrt(2) - sqrt(3) < 0 ; 4 - sqrt(2) - sqrt(3) > 0 ; sqrt(8) - 2 sqrt(2) = 0.
  EXPECT_LT(detail::sign_of_sqrt_sum(Q(3), {Q(-1), Q(-1)}, {Q(2), Q(3)}), 0);
  EXPECT_GT(detail::sign_of_sqrt_sum(Q(4), {Q(-1), Q(-1)}, {Q(2), Q(3)}), 0);
  EXPECT_EQ(detail::sign_of_sqrt_sum(Q(0), {Q(1), Q(-2)}, {Q(8), Q(2)}), 0);
}
