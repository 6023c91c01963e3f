#ifndef CIRCPACK_NFDH_H_
#define CIRCPACK_NFDH_H_

#include <vector>

#include "circpack/packing.h"

namespace circpack {

struct Shelf {
  Rational y_base;
  Rational height;    // side of the first box on the shelf
  Rational cursor_x;  // right end of the last box placed
};

struct SquareItem {
  int id = 0;
  Rational side;
};

struct NfdhResult {
  Rational width;
  Rational height;
  std::vector<BinContent> bins;             // box centers
  std::vector<std::vector<Rational>> sides; // sides[b][k] belongs to bins[b].placements[k]
  std::vector<std::vector<Shelf>> shelves;
};

// Next fit decreasing height: sides sorted non-increasing (ties by id), a box
// that does not fit the current shelf opens a new one, a shelf that does not
// fit the bin opens a new bin. Fits are closed comparisons.
NfdhResult nfdh_pack_squares(const std::vector<SquareItem>& items, const Rational& w, const Rational& H);

// Bounding boxes of side 2 r; circles are centered in their boxes.
NfdhResult nfdh_pack_circles(const std::vector<Circle>& circles, const Rational& w, const Rational& H);

struct DensityAudit {
  bool applicable = false;     // at least two bins
  Rational min_box_density;    // over all bins but the last
  Rational min_circle_density; // same, circle areas with the lower bound on pi
};

DensityAudit nfdh_density_audit(const NfdhResult& result);

}  // namespace circpack

#endif  // CIRCPACK_NFDH_H_
