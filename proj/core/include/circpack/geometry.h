#ifndef CIRCPACK_GEOMETRY_H_
#define CIRCPACK_GEOMETRY_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>

#include "circpack/rational.h"

namespace circpack {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

struct Circle {
  int id = 0;
  Rational radius;

  friend bool operator==(const Circle&, const Circle&) = default;
};

// Closed axis-aligned rectangle [x, x + width] x [y, y + height].
struct Rect {
  Point2 origin;
  Rational width;
  Rational height;

  Rational x_max() const { return origin.x + width; }
  Rational y_max() const { return origin.y + height; }
  Rational area() const { return width * height; }
};

Rational dist_sq(const Point2& p, const Point2& q);

// Nearest point of the closed rectangle to p.
Point2 clamp_to_rect(const Point2& p, const Rect& rect);
// A corner of the rectangle at maximal distance from p.
Point2 farthest_corner(const Point2& p, const Rect& rect);

enum class CircleRectRelation {
  kDisjoint,          // open disk and closed rectangle do not meet
  kCellInsideCircle,  // rectangle lies in the closed disk
  kPartialOverlap,
};

CircleRectRelation circle_rect_relation(const Point2& center, const Rational& r, const Rect& cell);

// True iff the open disk meets the closed rectangle.
bool disk_meets_rect(const Point2& center, const Rational& r, const Rect& cell);
// True iff the closed rectangle lies in the closed disk.
bool rect_inside_disk(const Point2& center, const Rational& r, const Rect& cell);

// Row range [first, last] of a vertical stack of `rows` cells, the k-th
// spanning [y0 + k*h, y0 + (k+1)*h] x [x0, x1], whose cells meet the open
// disk (or, with `contained`, lie inside the closed disk). Empty -> nullopt.
// Both sets are contiguous because the predicates are monotone in |dy|.
std::optional<std::pair<std::int64_t, std::int64_t>> disk_row_span(
    const Point2& center, const Rational& r, const Rational& x0, const Rational& x1,
    const Rational& y0, const Rational& cell_height, std::int64_t rows, bool contained);

}  // namespace circpack

#endif  // CIRCPACK_GEOMETRY_H_
