#include "circpack/verify.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circpack {

void Instance::validate() const {
  if (w <= 0 || h <= 0) throw std::invalid_argument("bin dimensions must be positive");
  const Rational limit = std::min(w, h);
  std::map<int, bool> seen;
  for (const auto& c : circles) {
    if (c.radius <= 0) throw std::invalid_argument("circle " + std::to_string(c.id) + " has non-positive radius");
    if (2 * c.radius > limit) {
      throw std::invalid_argument("circle " + std::to_string(c.id) + " does not fit the bin");
    }
    if (!seen.emplace(c.id, true).second) throw std::invalid_argument("duplicate circle id " + std::to_string(c.id));
  }
}

Rational Instance::total_radius_sq() const {
  Rational sum;
  for (const auto& c : circles) sum += c.radius * c.radius;
  return sum;
}

std::size_t Packing::placement_count() const {
  std::size_t n = 0;
  for (const auto& bin : bins) n += bin.placements.size();
  return n;
}

const char* side_name(Side side) {
  switch (side) {
    case Side::kLeft: return "left";
    case Side::kRight: return "right";
    case Side::kBottom: return "bottom";
    case Side::kTop: return "top";
  }
  return "?";
}

VerificationReport verify_bin(std::span<const Rational> radii, std::span<const Placement> placements,
                              const Rational& width, const Rational& height, std::size_t bin_index) {
  if (radii.size() != placements.size()) throw std::invalid_argument("radii and placements differ in length");
  VerificationReport report;
  auto note_bound = [&](int id, Side side, const Rational& gap) {
    if (gap <= 0) return;
    report.violations.push_back({Violation::Kind::kOutOfBounds, bin_index, id, id, side, gap});
    report.max_violation = std::max(report.max_violation, gap);
  };
  Rational r_max;
  for (std::size_t k = 0; k < placements.size(); ++k) {
    const Rational& r = radii[k];
    const Point2& c = placements[k].center;
    const int id = placements[k].id;
    note_bound(id, Side::kLeft, r - c.x);
    note_bound(id, Side::kRight, c.x + r - width);
    note_bound(id, Side::kBottom, r - c.y);
    note_bound(id, Side::kTop, c.y + r - height);
    r_max = std::max(r_max, r);
  }

  std::vector<std::size_t> order(placements.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return placements[a].center.x < placements[b].center.x;
  });
  for (std::size_t a = 0; a < order.size(); ++a) {
    const std::size_t i = order[a];
    const Point2& pi = placements[i].center;
    const Rational reach = radii[i] + r_max;
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const std::size_t j = order[b];
      const Point2& pj = placements[j].center;
      if (pj.x - pi.x >= reach) break;
      const Rational s = radii[i] + radii[j];
      const Rational dy = pj.y - pi.y;
      if (dy >= s || -dy >= s) continue;
      const Rational d = dist_sq(pi, pj);
      const Rational s_sq = s * s;
      if (d >= s_sq) continue;
      int lo = placements[i].id, hi = placements[j].id;
      if (lo > hi) std::swap(lo, hi);
      report.violations.push_back({Violation::Kind::kOverlap, bin_index, lo, hi, Side::kLeft, s_sq - d});
      Rational eps = s - sqrt_lower(d, 34);
      report.max_violation = std::max(report.max_violation, eps);
    }
  }
  report.valid = report.violations.empty();
  return report;
}

VerificationReport verify_packing(const Instance& inst, const Packing& pk) {
  std::map<int, const Rational*> radius_of;
  for (const auto& c : inst.circles) radius_of.emplace(c.id, &c.radius);
  std::map<int, bool> placed;
  VerificationReport total;
  for (std::size_t b = 0; b < pk.bins.size(); ++b) {
    const auto& bin = pk.bins[b];
    std::vector<Rational> radii;
    radii.reserve(bin.placements.size());
    for (const auto& p : bin.placements) {
      auto it = radius_of.find(p.id);
      if (it == radius_of.end()) throw std::invalid_argument("unknown circle id " + std::to_string(p.id));
      if (!placed.emplace(p.id, true).second) {
        throw std::invalid_argument("duplicate placement of circle " + std::to_string(p.id));
      }
      radii.push_back(*it->second);
    }
    VerificationReport report = verify_bin(radii, bin.placements, pk.bin_width, pk.bin_height, b);
    total.max_violation = std::max(total.max_violation, report.max_violation);
    for (auto& v : report.violations) total.violations.push_back(std::move(v));
  }
  for (const auto& c : inst.circles) {
    if (!placed.count(c.id)) throw std::invalid_argument("circle " + std::to_string(c.id) + " is not placed");
  }
  total.valid = total.violations.empty();
  return total;
}

bool is_epsilon_packing(std::span<const Rational> radii, std::span<const Point2> centers,
                        const Rational& width, const Rational& height, const Rational& eps) {
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const Rational& r = radii[k];
    const Point2& c = centers[k];
    if (c.x < r - eps || c.x > width - r + eps) return false;
    if (c.y < r - eps || c.y > height - r + eps) return false;
  }
  for (std::size_t i = 0; i < centers.size(); ++i) {
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      const Rational need = radii[i] + radii[j] - eps;
      if (need <= 0) continue;
      if (dist_sq(centers[i], centers[j]) < need * need) return false;
    }
  }
  return true;
}

std::int64_t area_lower_bound(const Instance& inst) {
  const Rational bins = pi_lower() * inst.total_radius_sq() / (inst.w * inst.h);
  return ceil_of(bins).get_si();
}

}  // namespace circpack
