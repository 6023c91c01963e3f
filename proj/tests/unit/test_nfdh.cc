#include <gtest/gtest.h>

#include <random>

#include "circpack/nfdh.h"
#include "circpack/verify.h"
#include "support/test_util.h"

using namespace circpack;
using circpack::testing::make_instance;
using circpack::testing::Q;
using circpack::testing::random_rational;

TEST(Nfdh, ShelfExample) {
  const std::vector<SquareItem> items{{0, Q(7, 20)}, {1, Q(8, 25)}, {2, Q(7, 25)}};
  const auto r = nfdh_pack_squares(items, Q(1), Q(1));
  ASSERT_EQ(r.bins.size(), 1u);
  ASSERT_EQ(r.shelves[0].size(), 1u);
  EXPECT_EQ(r.shelves[0][0].height, Q(7, 20));
  EXPECT_EQ(r.shelves[0][0].cursor_x, Q(7, 20) + Q(8, 25) + Q(7, 25));
  EXPECT_EQ(r.bins[0].placements[1].center.x, Q(7, 20) + Q(4, 25));
}

TEST(Nfdh, SideEqualToWidth) {
  const auto r = nfdh_pack_squares({{0, Q(1)}, {1, Q(1)}}, Q(1), Q(2));
  ASSERT_EQ(r.bins.size(), 1u);
  EXPECT_EQ(r.shelves[0].size(), 2u);
  EXPECT_EQ(r.bins[0].placements[1].center, (Point2{Q(1, 2), Q(3, 2)}));
}

TEST(Nfdh, EmptyInput) {
  const auto r = nfdh_pack_squares({}, Q(1), Q(1));
  EXPECT_TRUE(r.bins.empty());
  EXPECT_FALSE(nfdh_density_audit(r).applicable);
}

TEST(Nfdh, OversizeRejected) {
  EXPECT_THROW(nfdh_pack_squares({{0, Q(3, 2)}}, Q(1), Q(2)), std::invalid_argument);
  EXPECT_THROW(nfdh_pack_squares({{0, Q(1, 2)}}, Q(0), Q(2)), std::invalid_argument);
}

TEST(Nfdh, RandomProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Rational w = trial % 3 == 0 ? Q(1) : Q(2);
    const Rational H = trial % 2 == 0 ? Q(1) : Q(3, 2);
    const Rational cap = std::min(w, H) / 2;
    std::vector<Rational> radii;
    const int n = 1 + static_cast<int>(rng() % 60);
    for (int i = 0; i < n; ++i) radii.push_back(random_rational(rng, Q(1, 100), cap, 97));
    Instance inst = make_instance(radii, w, H);
    const auto r = nfdh_pack_circles(inst.circles, w, H);

    Packing pk{r.bins, w, H};
    ASSERT_TRUE(verify_packing(inst, pk).valid);

    for (const auto& shelves : r.shelves) {
      for (std::size_t k = 1; k < shelves.size(); ++k) {
        EXPECT_LE(shelves[k].height, shelves[k - 1].height);
        EXPECT_EQ(shelves[k].y_base, shelves[k - 1].y_base + shelves[k - 1].height);
      }
      EXPECT_LE(shelves.back().y_base + shelves.back().height, H);
      for (const auto& s : shelves) EXPECT_LE(s.cursor_x, w);
    }
  }
}

TEST(Nfdh, DensityWithSmallBoxes) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> radii;
    const int n = 40 + static_cast<int>(rng() % 200);
    for (int i = 0; i < n; ++i) radii.push_back(random_rational(rng, Q(1, 200), Q(1, 8), 199));
    const Instance inst = make_instance(radii);
    const auto r = nfdh_pack_circles(inst.circles, Q(1), Q(1));
    const auto audit = nfdh_density_audit(r);
    if (!audit.applicable) continue;
    EXPECT_GE(audit.min_box_density, Q(1, 4));
    EXPECT_GE(audit.min_circle_density, pi_lower() / 16);
    Rational boxes;
    for (const auto& x : radii) boxes += 4 * x * x;
    EXPECT_LE(Rational(static_cast<long>(r.bins.size())), 4 * boxes + 1);
  }
}
