#include "circpack/geometry.h"

namespace circpack {

Rational dist_sq(const Point2& p, const Point2& q) {
  Rational dx = p.x - q.x;
  Rational dy = p.y - q.y;
  return dx * dx + dy * dy;
}

namespace {

const Rational& clamp_scalar(const Rational& v, const Rational& lo, const Rational& hi) {
  if (v < lo) return lo;
  if (v > hi) return hi;
  return v;
}

Rational far_coordinate(const Rational& v, const Rational& lo, const Rational& hi) {
  return (v - lo >= hi - v) ? lo : hi;
}

}  // namespace

Point2 clamp_to_rect(const Point2& p, const Rect& rect) {
  Rational x_hi = rect.x_max();
  Rational y_hi = rect.y_max();
  return {clamp_scalar(p.x, rect.origin.x, x_hi), clamp_scalar(p.y, rect.origin.y, y_hi)};
}

Point2 farthest_corner(const Point2& p, const Rect& rect) {
  return {far_coordinate(p.x, rect.origin.x, rect.x_max()),
          far_coordinate(p.y, rect.origin.y, rect.y_max())};
}

bool disk_meets_rect(const Point2& center, const Rational& r, const Rect& cell) {
  return dist_sq(center, clamp_to_rect(center, cell)) < r * r;
}

bool rect_inside_disk(const Point2& center, const Rational& r, const Rect& cell) {
  return dist_sq(center, farthest_corner(center, cell)) <= r * r;
}

CircleRectRelation circle_rect_relation(const Point2& center, const Rational& r, const Rect& cell) {
  if (!disk_meets_rect(center, r, cell)) return CircleRectRelation::kDisjoint;
  if (rect_inside_disk(center, r, cell)) return CircleRectRelation::kCellInsideCircle;
  return CircleRectRelation::kPartialOverlap;
}

std::optional<std::pair<std::int64_t, std::int64_t>> disk_row_span(
    const Point2& center, const Rational& r, const Rational& x0, const Rational& x1,
    const Rational& y0, const Rational& cell_height, std::int64_t rows, bool contained) {
  if (rows <= 0) return std::nullopt;
  const Rational r_sq = r * r;
  Rational dx;
  if (contained) {
    dx = far_coordinate(center.x, x0, x1) - center.x;
  } else {
    dx = clamp_scalar(center.x, x0, x1) - center.x;
  }
  const Rational dx_sq = dx * dx;
  if (contained ? dx_sq > r_sq : dx_sq >= r_sq) return std::nullopt;

  auto holds = [&](std::int64_t k) {
    Rational lo = y0 + Rational(static_cast<long>(k)) * cell_height;
    Rational hi = lo + cell_height;
    Rational dy = contained ? far_coordinate(center.y, lo, hi) - center.y
                            : clamp_scalar(center.y, lo, hi) - center.y;
    Rational d = dx_sq + dy * dy;
    return contained ? d <= r_sq : d < r_sq;
  };

  BigInt kc_big = floor_of((center.y - y0) / cell_height);
  std::int64_t kc;
  if (kc_big < 0) {
    kc = 0;
  } else if (kc_big >= rows) {
    kc = rows - 1;
  } else {
    kc = kc_big.get_si();
  }
  if (!holds(kc)) return std::nullopt;

  // Largest k >= kc that holds.
  std::int64_t lo = kc, hi = rows - 1;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (holds(mid)) lo = mid; else hi = mid - 1;
  }
  const std::int64_t last = lo;
  lo = 0;
  hi = kc;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (holds(mid)) hi = mid; else lo = mid + 1;
  }
  return std::make_pair(lo, last);
}

}  // namespace circpack
