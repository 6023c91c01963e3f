#ifndef CIRCPACK_PACKING_H_
#define CIRCPACK_PACKING_H_

#include <vector>

#include "circpack/geometry.h"

namespace circpack {

// A circle bin packing instance: circles with radii, bins of size w x h.
struct Instance {
  std::vector<Circle> circles;
  Rational w;
  Rational h;

  // Throws std::invalid_argument unless w, h > 0, radii are positive,
  // 2 r <= min(w, h) and ids are unique.
  void validate() const;
  Rational total_radius_sq() const;
};

struct Placement {
  int id = 0;
  Point2 center;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct BinContent {
  std::vector<Placement> placements;

  friend bool operator==(const BinContent&, const BinContent&) = default;
};

// All bins share the same (possibly augmented) size.
struct Packing {
  std::vector<BinContent> bins;
  Rational bin_width;
  Rational bin_height;

  std::size_t placement_count() const;
  friend bool operator==(const Packing&, const Packing&) = default;
};

}  // namespace circpack

#endif  // CIRCPACK_PACKING_H_
