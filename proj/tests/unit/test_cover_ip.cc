#include <gtest/gtest.h>

#include <random>

#include "circpack/cover_ip.h"
#include "support/oracles.h"
#include "support/test_util.h"

using namespace circpack;
using circpack::testing::Q;

namespace {

CoverIPInstance make(std::vector<std::vector<int>> configs, std::vector<std::int64_t> demands) {
  CoverIPInstance ip;
  for (auto& c : configs) ip.configs.push_back(Configuration{std::move(c)});
  ip.demands = std::move(demands);
  return ip;
}

std::int64_t covered(const CoverIPInstance& ip, const CoverIPSolution& s, std::size_t cls) {
  std::int64_t have = 0;
  for (std::size_t k = 0; k < ip.configs.size(); ++k) have += s.multiplicity[k] * ip.configs[k].counts[cls];
  return have;
}

}  // namespace

TEST(CoverIP, SingleConfiguration) {
  const auto s = solve_cover_ip(make({{1}}, {3}));
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.bins, 3);
  EXPECT_EQ(s.multiplicity, (std::vector<std::int64_t>{3}));
  EXPECT_TRUE(s.optimal);
}

TEST(CoverIP, CeilingOfSeven) {
  const auto s = solve_cover_ip(make({{4}, {1}}, {7}));
  EXPECT_EQ(s.bins, 2);
  EXPECT_EQ(s.lp_bound, Q(7, 4));
}

TEST(CoverIP, MixedExample) {
  const std::vector<std::vector<int>> configs{{2, 0}, {0, 3}, {1, 1}};
  ASSERT_EQ(oracle_ref::exhaustive_cover(configs, {2, 2}, 4), 2);
  const auto ip = make(configs, {2, 2});
  const auto s = solve_cover_ip(ip);
  EXPECT_EQ(s.bins, 2);
  EXPECT_GE(covered(ip, s, 0), 2);
  EXPECT_GE(covered(ip, s, 1), 2);
  EXPECT_EQ(solve_cover_ip_enumerate(ip, 4).bins, 2);
}

TEST(CoverIP, UncoveredClassIsFlagged) {
  const auto s = solve_cover_ip(make({{1, 0}}, {1, 1}));
  EXPECT_FALSE(s.feasible);
  EXPECT_EQ(s.uncovered_class, 1);
}

TEST(CoverIP, ZeroDemand) {
  const auto s = solve_cover_ip(make({{1, 0}}, {0, 0}));
  EXPECT_TRUE(s.feasible);
  EXPECT_EQ(s.bins, 0);
}

TEST(CoverIP, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const int K = 1 + static_cast<int>(rng() % 3);
    const int C = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<int>> configs;
    for (int c = 0; c < C; ++c) {
      std::vector<int> v(K);
      for (auto& x : v) x = static_cast<int>(rng() % 4);
      configs.push_back(v);
    }
    for (int k = 0; k < K; ++k) {
      std::vector<int> unit(K, 0);
      unit[k] = 1;
      configs.push_back(unit);
    }
    std::vector<int> d(K);
    std::vector<std::int64_t> d64(K);
    for (int k = 0; k < K; ++k) d64[k] = d[k] = static_cast<int>(rng() % 7);
    const int cap = d[0] + (K > 1 ? d[1] : 0) + (K > 2 ? d[2] : 0);
    const std::int64_t want = oracle_ref::exhaustive_cover(configs, d, cap);
    const auto ip = make(configs, d64);
    const auto s = solve_cover_ip(ip);
    ASSERT_TRUE(s.feasible);
    ASSERT_TRUE(s.optimal);
    ASSERT_EQ(s.bins, want) << "trial " << trial;
    ASSERT_LE(s.lp_bound, Rational(static_cast<long>(s.bins)));
    for (int k = 0; k < K; ++k) ASSERT_GE(covered(ip, s, k), d64[k]);
  }
}

TEST(CoverIP, LinearRelaxation) {
  // min y1 + y2  s.t.  2 y1 + y2 >= 3, y1 + 3 y2 >= 4  ->  y = (1, 1), value 2.
  std::vector<Rational> sol;
  Rational value;
  ASSERT_TRUE(solve_cover_lp({{Q(2), Q(1)}, {Q(1), Q(3)}}, {Q(3), Q(4)}, {Q(-1), Q(-1)}, sol, value));
  EXPECT_EQ(value, Q(2));
  EXPECT_EQ(sol, (std::vector<Rational>{Q(1), Q(1)}));
  // Upper bound y1 <= 1/2 forces y2 up.
  ASSERT_TRUE(solve_cover_lp({{Q(2), Q(1)}}, {Q(3)}, {Q(1, 2), Q(-1)}, sol, value));
  EXPECT_EQ(value, Q(5, 2));
  EXPECT_FALSE(solve_cover_lp({{Q(1)}}, {Q(3)}, {Q(1)}, sol, value));
}
