#include "circpack/brute_force.h"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace circpack {

BruteForceResult brute_force_opt(const Instance& inst, const BackendOptions& backend, std::int64_t call_budget) {
  inst.validate();
  const std::size_t n = inst.circles.size();
  if (n > 8) throw std::invalid_argument("brute force handles at most eight circles");
  BruteForceResult result;
  const std::size_t full = (std::size_t{1} << n) - 1;
  // 0: not admitted, 1: admitted, 2: no certificate either way.
  std::vector<int> state(full + 1, 0);
  std::map<std::vector<Rational>, int> by_multiset;
  BackendOptions options = backend;
  options.require_exact = true;
  const Rational alpha = std::min(inst.w, inst.h) / 1024;

  for (std::size_t mask = 1; mask <= full; ++mask) {
    bool blocked = false;
    for (std::size_t k = 0; k < n && !blocked; ++k) {
      const std::size_t bit = std::size_t{1} << k;
      if ((mask & bit) && mask != bit && state[mask ^ bit] != 1) blocked = true;
    }
    std::vector<Rational> radii;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) radii.push_back(inst.circles[k].radius);
    }
    std::sort(radii.begin(), radii.end(), std::greater<>());
    if (blocked) {
      state[mask] = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t bit = std::size_t{1} << k;
        if ((mask & bit) && mask != bit && state[mask ^ bit] == 2) state[mask] = 2;
      }
      continue;
    }
    auto cached = by_multiset.find(radii);
    if (cached != by_multiset.end()) {
      state[mask] = cached->second;
      continue;
    }
    if (result.oracle_calls >= call_budget) return result;
    ++result.oracle_calls;
    Configuration cfg;
    cfg.counts.assign(radii.size(), 1);
    const OracleVerdict v = check_configuration(radii, cfg, inst.w, inst.h, alpha, options);
    const int s = (v.feasible() && v.exact) ? 1 : (v.kind == OracleVerdict::Kind::kProvenInfeasible ? 0 : 2);
    state[mask] = s;
    by_multiset.emplace(radii, s);
  }

  auto minimum = [&](bool admit_unknown) {
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 2;
    std::vector<std::int64_t> best(full + 1, inf);
    best[0] = 0;
    for (std::size_t mask = 1; mask <= full; ++mask) {
      const std::size_t low = mask & (~mask + 1);
      for (std::size_t part = mask; part; part = (part - 1) & mask) {
        if (!(part & low)) continue;
        const bool ok = state[part] == 1 || (admit_unknown && state[part] == 2);
        if (ok && best[mask ^ part] + 1 < best[mask]) best[mask] = best[mask ^ part] + 1;
      }
    }
    return best[full];
  };
  result.known = true;
  result.bins = minimum(false);
  result.lower = minimum(true);
  return result;
}

}  // namespace circpack
