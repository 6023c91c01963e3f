#ifndef CIRCPACK_REPAIR_H_
#define CIRCPACK_REPAIR_H_

#include <span>
#include <vector>

#include "circpack/lp_norm.h"
#include "circpack/packing.h"

namespace circpack {

// Placements that violate the packing constraints by at most epsilon * h
// (absolute slack), in a bin of size w x h.
struct EpsilonPacking {
  std::vector<Placement> placements;
  std::vector<Rational> radii;  // radii[k] belongs to placements[k]
  Rational epsilon;             // relative: the slack is epsilon * h
  Rational w;
  Rational h;
};

struct RepairResult {
  BinContent content;
  Rational lift_step;  // q >= sqrt(6 eps), q <= sqrt(6 eps) + 2^-32
  Rational height;     // (1 + n q) h, the augmented bin height
};

// Border shift, uniform lift by eps*h, then the k-th lowest circle (ties by
// id) is raised by (k-1) q h. The result is verified exactly against
// w x height before it is returned.
RepairResult repair_packing(const EpsilonPacking& ep);

struct LiftCertificate {
  bool holds = false;
  Rational lift;            // rational q >= sqrt(2 eps) h
  Rational dist_sq_after;   // |p1' - p2|^2
  Rational chain_bound;     // (r1 + r2 - eps h)^2 + q^2, a lower bound on dist_sq_after
  Rational required;        // (r1 + r2)^2
};

// Lifts p1 (the higher point) by q >= sqrt(2 eps) h. Throws
// std::invalid_argument when the hypotheses eps h <= r1 + r2 <= h, y1 >= y2
// and dist(p1, p2) >= r1 + r2 - eps h do not hold.
LiftCertificate lift_suffices(const Point2& p1, const Point2& p2, const Rational& r1, const Rational& r2,
                              const Rational& h, const Rational& eps);

struct SphereShiftResult {
  std::vector<PointD> centers;  // in input order
  Rational shift_step;          // T >= (2^a eps)^(1/p) h / omega_1
  Rational extra_extent;        // (n - 1) T added to the first dimension
};

// Sorts spheres by first coordinate (ties by index) and shifts the k-th by
// (k - 1) T along the first axis. Finite p only: for p = infinity lifting
// cannot fix small overlaps (two unit squares may need a full side of lift).
SphereShiftResult lp_shift_repair(std::span<const PointD> centers, std::span<const Rational> radii,
                                  const WeightedNorm& norm, const Rational& eps, const Rational& h);

}  // namespace circpack

#endif  // CIRCPACK_REPAIR_H_
