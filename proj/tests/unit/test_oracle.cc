#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "circpack/oracle.h"
#include "circpack/verify.h"
#include "support/oracles.h"
#include "support/test_util.h"

using namespace circpack;
using circpack::testing::Q;

namespace {

OracleVerdict check(const std::vector<Rational>& classes, std::vector<int> counts, const Rational& alpha = Q(1, 256),
                    BackendOptions opt = {}) {
  return check_configuration(classes, Configuration{std::move(counts)}, Q(1), Q(1), alpha, opt);
}

void expect_sound(const OracleVerdict& v, const std::vector<Rational>& radii, const Rational& alpha) {
  ASSERT_TRUE(v.feasible());
  std::vector<Point2> centers;
  for (const auto& p : v.packing.placements) centers.push_back(p.center);
  EXPECT_TRUE(is_epsilon_packing(radii, centers, Q(1), Q(1), 4 * alpha));
  const Rational step = snap_step(alpha);
  EXPECT_LE(step, alpha);
  for (const auto& c : centers) {
    for (const Rational& coord : {c.x, c.y}) {
      EXPECT_LE(Rational(coord.get_den()), 2 / alpha) << to_string(coord);
    }
  }
}

}  // namespace

TEST(Oracle, SingleHalfCircle) {
  const auto v = check({Q(1, 2)}, {1});
  ASSERT_TRUE(v.feasible());
  EXPECT_EQ(v.packing.placements[0].center, (Point2{Q(1, 2), Q(1, 2)}));
  expect_sound(v, {Q(1, 2)}, Q(1, 256));
}

TEST(Oracle, MixedPairIsCertifiedInfeasible) {
  const std::vector<Rational> classes{Q(1, 2), Q(1, 4)};
  const auto v = check(classes, {1, 1});
  EXPECT_EQ(v.kind, OracleVerdict::Kind::kProvenInfeasible);
  EXPECT_EQ(v.certificate, OracleVerdict::Certificate::kPairwiseLowerBound);
  EXPECT_TRUE(certificate_holds(v, slot_radii(classes, Configuration{{1, 1}}), Q(1), Q(1)));
}

TEST(Oracle, AreaCertificate) {
  const std::vector<Rational> radii(5, Q(1, 4) + Q(1, 20));
  const auto pre = infeasibility_prepass(radii, Q(1), Q(1));
  ASSERT_TRUE(pre.has_value());
  EXPECT_TRUE(certificate_holds(*pre, radii, Q(1), Q(1)));
}

// The two-circle threshold (2 - sqrt 2)/2 is pinned by the reference grid
// search before the library is asked.
TEST(Oracle, TwoCircleThreshold) {
  ASSERT_TRUE(oracle_ref::equal_circles_fit_unit_square(2, 0.29, 200));
  ASSERT_FALSE(oracle_ref::equal_circles_fit_unit_square(2, 0.30, 200));
  ASSERT_TRUE(oracle_ref::equal_circles_fit_unit_square(2, 0.2928, 200));
  ASSERT_FALSE(oracle_ref::equal_circles_fit_unit_square(2, 0.2930, 200));
  EXPECT_NEAR((2 - std::sqrt(2.0)) / 2, 0.29289, 1e-5);

  const auto fit = check({Q(29, 100)}, {2});
  expect_sound(fit, {Q(29, 100), Q(29, 100)}, Q(1, 256));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    BackendOptions opt;
    opt.seed = seed;
    EXPECT_FALSE(check({Q(3, 10)}, {2}, Q(1, 256), opt).feasible());
    opt.kind = BackendKind::kGrid;
    EXPECT_FALSE(check({Q(3, 10)}, {2}, Q(1, 64), opt).feasible());
  }
}

TEST(Oracle, FourQuarterCirclesSnapToCorners) {
  ASSERT_TRUE(oracle_ref::equal_circles_fit_unit_square(4, 0.25, 40));
  ASSERT_FALSE(oracle_ref::equal_circles_fit_unit_square(5, 0.25, 40));
  for (const Rational& alpha : {Q(1, 1024), Q(1, 64)}) {
    const auto v = check({Q(1, 4)}, {4}, alpha);
    ASSERT_TRUE(v.feasible());
    std::vector<std::pair<Rational, Rational>> got;
    for (const auto& p : v.packing.placements) got.emplace_back(p.center.x, p.center.y);
    std::sort(got.begin(), got.end());
    const std::vector<std::pair<Rational, Rational>> want{
        {Q(1, 4), Q(1, 4)}, {Q(1, 4), Q(3, 4)}, {Q(3, 4), Q(1, 4)}, {Q(3, 4), Q(3, 4)}};
    EXPECT_EQ(got, want);
    EXPECT_TRUE(v.exact);
  }
  EXPECT_FALSE(check({Q(1, 4)}, {5}).feasible());
}

TEST(Oracle, GridBackendExamples) {
  BackendOptions opt;
  opt.kind = BackendKind::kGrid;
  EXPECT_TRUE(grid_backend({Q(1, 4), Q(1, 4)}, Q(1), Q(1), Q(1, 16), opt).feasible());
  EXPECT_EQ(grid_backend({Q(1, 2), Q(1, 4)}, Q(1), Q(1), Q(1, 16), opt).kind, OracleVerdict::Kind::kUnknown);
  const auto one = grid_backend({Q(1, 2)}, Q(1), Q(1), Q(1, 4), opt);
  ASSERT_TRUE(one.feasible());
  EXPECT_EQ(one.packing.placements[0].center, (Point2{Q(1, 2), Q(1, 2)}));
  EXPECT_THROW(grid_backend(std::vector<Rational>(6, Q(1, 16)), Q(1), Q(1), Q(1, 16), opt), std::invalid_argument);
}

TEST(Oracle, BackendsNeverContradict) {
  const std::vector<Rational> classes{Q(1, 2), Q(1, 3), Q(1, 4), Q(1, 8)};
  int checked = 0;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      for (int c = 0; a + b + c <= 4; ++c) {
        for (int d = 0; a + b + c + d <= 4; ++d) {
          if (a + b + c + d == 0) continue;
          const Configuration cfg{{a, b, c, d}};
          const auto radii = slot_radii(classes, cfg);
          const auto pre = infeasibility_prepass(radii, Q(1), Q(1));
          BackendOptions cont;
          cont.restarts = 3;
          BackendOptions grid;
          grid.kind = BackendKind::kGrid;
          grid.grid_node_budget = 200000;
          const auto vc = continuous_backend(radii, Q(1), Q(1), Q(1, 32), cont);
          const auto vg = grid_backend(radii, Q(1), Q(1), Q(1, 24), grid);
          if (pre) {
            EXPECT_TRUE(certificate_holds(*pre, radii, Q(1), Q(1)));
            EXPECT_FALSE(vc.feasible() && vc.exact);
            EXPECT_FALSE(vg.feasible());
          }
          if (vg.feasible()) {
            std::vector<Point2> centers;
            for (const auto& p : vg.packing.placements) centers.push_back(p.center);
            EXPECT_TRUE(is_epsilon_packing(radii, centers, Q(1), Q(1), Q(0)));
          }
          ++checked;
        }
      }
    }
  }
  EXPECT_EQ(checked, 69);
}

TEST(Oracle, DeterministicUnderSeed) {
  const std::vector<Rational> classes{Q(1, 4), Q(1, 5), Q(1, 7)};
  BackendOptions opt;
  opt.seed = 42;
  const auto a = check(classes, {2, 2, 2}, Q(1, 512), opt);
  const auto b = check(classes, {2, 2, 2}, Q(1, 512), opt);
  EXPECT_EQ(a.kind, b.kind);
  EXPECT_EQ(a.packing.placements, b.packing.placements);
  EXPECT_EQ(a.restart, b.restart);
}

TEST(Oracle, FeasibleVerdictsAreSound) {
  const std::vector<Rational> classes{Q(1, 4), Q(1, 6), Q(1, 9)};
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (int c = 0; c <= 4; ++c) {
        if (a + b + c == 0) continue;
        const Configuration cfg{{a, b, c}};
        const auto v = check(classes, cfg.counts, Q(1, 128));
        if (v.feasible()) expect_sound(v, slot_radii(classes, cfg), Q(1, 128));
        if (v.kind == OracleVerdict::Kind::kProvenInfeasible) {
          EXPECT_TRUE(certificate_holds(v, slot_radii(classes, cfg), Q(1), Q(1)));
        }
      }
    }
  }
}

TEST(Oracle, SnapStep) {
  EXPECT_EQ(snap_step(Q(1, 10)), Q(1, 16));
  EXPECT_EQ(snap_step(Q(1, 16)), Q(1, 16));
  EXPECT_EQ(backend_name(parse_backend("grid")), std::string("grid"));
  EXPECT_THROW(parse_backend("magic"), std::invalid_argument);
}
