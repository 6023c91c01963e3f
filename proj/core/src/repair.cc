#include "circpack/repair.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "circpack/verify.h"

namespace circpack {

RepairResult repair_packing(const EpsilonPacking& ep) {
  const std::size_t n = ep.placements.size();
  if (ep.radii.size() != n) throw std::invalid_argument("repair: radii and placements differ in length");
  if (ep.epsilon <= 0) throw std::invalid_argument("repair: epsilon must be positive");
  if (ep.w <= 0 || ep.h <= 0) throw std::invalid_argument("repair: bin dimensions must be positive");
  const Rational slack = ep.epsilon * ep.h;
  for (std::size_t i = 0; i < n; ++i) {
    if (2 * ep.radii[i] > ep.w) throw std::invalid_argument("repair: circle wider than the bin");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ep.radii[i] + ep.radii[j] - slack < 0) {
        throw std::invalid_argument("repair: epsilon exceeds the sum of two radii");
      }
    }
  }
  std::vector<Point2> centers;
  centers.reserve(n);
  for (const auto& p : ep.placements) centers.push_back(p.center);
  if (!is_epsilon_packing(ep.radii, centers, ep.w, ep.h, slack)) {
    throw std::invalid_argument("repair: input is not an (epsilon h)-packing");
  }

  // Border shift plus uniform lift: a 3 eps h-packing of w x (1 + 2 eps) h
  // with every circle inside the bin.
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& r = ep.radii[k];
    if (centers[k].x < r) {
      centers[k].x = r;
    } else if (centers[k].x > ep.w - r) {
      centers[k].x = ep.w - r;
    }
    centers[k].y += slack;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (centers[a].y != centers[b].y) return centers[a].y < centers[b].y;
    return ep.placements[a].id < ep.placements[b].id;
  });

  RepairResult result;
  result.lift_step = sqrt_upper(6 * ep.epsilon);
  const Rational step = result.lift_step * ep.h;
  for (std::size_t rank = 0; rank < n; ++rank) {
    centers[order[rank]].y += Rational(static_cast<long>(rank)) * step;
  }
  result.height = (1 + Rational(static_cast<long>(n)) * result.lift_step) * ep.h;
  result.content.placements.reserve(n);
  for (std::size_t k = 0; k < n; ++k) result.content.placements.push_back({ep.placements[k].id, centers[k]});

  VerificationReport check = verify_bin(ep.radii, result.content.placements, ep.w, result.height);
  if (!check.valid) throw std::logic_error("repair produced an overlapping packing");
  return result;
}

LiftCertificate lift_suffices(const Point2& p1, const Point2& p2, const Rational& r1, const Rational& r2,
                              const Rational& h, const Rational& eps) {
  const Rational s = r1 + r2;
  const Rational slack = eps * h;
  if (eps <= 0 || h <= 0 || r1 <= 0 || r2 <= 0) throw std::invalid_argument("lift: parameters must be positive");
  if (slack > s || s > h) throw std::invalid_argument("lift: needs eps h <= r1 + r2 <= h");
  if (p1.y < p2.y) throw std::invalid_argument("lift: p1 must not be below p2");
  const Rational reduced = s - slack;
  if (dist_sq(p1, p2) < reduced * reduced) throw std::invalid_argument("lift: points closer than r1 + r2 - eps h");

  LiftCertificate cert;
  cert.lift = sqrt_upper(2 * eps * h * h);
  const Point2 lifted{p1.x, p1.y + cert.lift};
  cert.dist_sq_after = dist_sq(lifted, p2);
  cert.chain_bound = reduced * reduced + cert.lift * cert.lift;
  cert.required = s * s;
  cert.holds = cert.chain_bound >= cert.required && cert.dist_sq_after >= cert.chain_bound;
  return cert;
}

SphereShiftResult lp_shift_repair(std::span<const PointD> centers, std::span<const Rational> radii,
                                  const WeightedNorm& norm, const Rational& eps, const Rational& h) {
  if (norm.infinite) {
    throw std::invalid_argument(
        "lp_shift_repair: lifting cannot repair L_infinity spheres (a small overlap of squares may need a "
        "shift of a full radius)");
  }
  norm.validate();
  const std::size_t n = centers.size();
  if (radii.size() != n) throw std::invalid_argument("lp_shift_repair: radii and centers differ in length");
  if (eps <= 0 || eps >= 1 || h <= 0) throw std::invalid_argument("lp_shift_repair: needs 0 < eps < 1, h > 0");
  for (std::size_t i = 0; i < n; ++i) {
    if (centers[i].size() != norm.dim()) throw std::invalid_argument("lp_shift_repair: dimension mismatch");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational s = radii[i] + radii[j];
      if (eps * h > s || s > h) throw std::invalid_argument("lp_shift_repair: needs eps h <= r1 + r2 <= h");
      const Rational reduced = s - eps * eps * h;
      if (lp_distance_cmp(centers[i], centers[j], norm, reduced) == Ordering::kLess) {
        throw std::invalid_argument("lp_shift_repair: spheres overlap by more than eps^2 h");
      }
    }
  }

  SphereShiftResult result;
  const Rational base = pow(pow(Rational(2), norm.a) * eps, norm.b);
  result.shift_step = root_upper(base, norm.a) * h / norm.omega[0];

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return centers[a][0] < centers[b][0]; });
  result.centers.assign(centers.begin(), centers.end());
  for (std::size_t rank = 0; rank < n; ++rank) {
    result.centers[order[rank]][0] += Rational(static_cast<long>(rank)) * result.shift_step;
  }
  result.extra_extent = n == 0 ? Rational(0) : Rational(static_cast<long>(n - 1)) * result.shift_step;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (lp_distance_cmp(result.centers[i], result.centers[j], norm, radii[i] + radii[j]) == Ordering::kLess) {
        throw std::logic_error("lp_shift_repair left an overlapping pair");
      }
    }
  }
  return result;
}

}  // namespace circpack
