#ifndef CIRCPACK_TESTS_ORACLES_H_
#define CIRCPACK_TESTS_ORACLES_H_

// Reference computations that share no code with the library. They use
// plain doubles and exhaustive search, so they are slow and only as sharp
// as their grids, which is enough to pin the values frozen in the tests.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle_ref {

// Is there a set of k grid points in [0, side]^2 (grid of steps+1 points
// per axis) with pairwise distance >= dmin - 1e-12?
inline bool grid_points_apart(int k, double side, int steps, double dmin) {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= steps; ++i) {
    for (int j = 0; j <= steps; ++j) pts.emplace_back(side * i / steps, side * j / steps);
  }
  std::vector<int> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (std::size_t p = from; p < pts.size(); ++p) {
      bool ok = true;
      for (int c : chosen) {
        const double dx = pts[p].first - pts[c].first;
        const double dy = pts[p].second - pts[c].second;
        if (std::sqrt(dx * dx + dy * dy) < dmin - 1e-12) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(static_cast<int>(p));
      if (go(p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return go(0);
}

// k equal circles of radius r in a unit square, by the grid search above on
// the admissible center square [r, 1 - r]^2.
inline bool equal_circles_fit_unit_square(int k, double r, int steps) {
  if (2 * r > 1) return false;
  return grid_points_apart(k, 1 - 2 * r, steps, 2 * r);
}

// min sum x subject to sum_c x_c c >= d, by enumerating all x with sum <= cap.
inline std::int64_t exhaustive_cover(const std::vector<std::vector<int>>& configs, const std::vector<int>& demands,
                                     int cap) {
  std::int64_t best = -1;
  std::vector<int> x(configs.size(), 0);
  std::function<void(std::size_t, int)> go = [&](std::size_t c, int used) {
    if (c == configs.size()) {
      for (std::size_t i = 0; i < demands.size(); ++i) {
        long have = 0;
        for (std::size_t k = 0; k < configs.size(); ++k) have += static_cast<long>(x[k]) * configs[k][i];
        if (have < demands[i]) return;
      }
      if (best < 0 || used < best) best = used;
      return;
    }
    for (int v = 0; used + v <= cap; ++v) {
      x[c] = v;
      go(c + 1, used + v);
    }
    x[c] = 0;
  };
  go(0, 0);
  return best;
}

// Minimum number of parts over set partitions of n items, where `fits`
// decides a part given as a bit mask.
inline int min_partition(int n, const std::function<bool(unsigned)>& fits) {
  const unsigned full = (1u << n) - 1;
  std::vector<int> best(full + 1, 1 << 20);
  best[0] = 0;
  for (unsigned m = 1; m <= full; ++m) {
    const unsigned low = m & (~m + 1);
    for (unsigned s = m; s; s = (s - 1) & m) {
      if (!(s & low) || !fits(s)) continue;
      best[m] = std::min(best[m], best[m ^ s] + 1);
    }
  }
  return best[full];
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace oracle_ref

#endif  // CIRCPACK_TESTS_ORACLES_H_
