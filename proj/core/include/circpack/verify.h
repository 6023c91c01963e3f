#ifndef CIRCPACK_VERIFY_H_
#define CIRCPACK_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "circpack/packing.h"

namespace circpack {

enum class Side { kLeft, kRight, kBottom, kTop };

const char* side_name(Side side);

struct Violation {
  enum class Kind { kOverlap, kOutOfBounds };

  Kind kind = Kind::kOverlap;
  std::size_t bin = 0;
  int i = 0;
  int j = 0;              // second circle for overlaps
  Side side = Side::kLeft;
  // Overlap: (r_i + r_j)^2 - dist^2 > 0.  Out of bounds: r - x (or the
  // analogous signed gap) > 0.
  Rational deficit;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
  // Smallest eps for which the input is an eps-packing: exact for boundary
  // terms and rational pair distances, otherwise an upper bound within 2^-32.
  Rational max_violation;
};

// Checks one bin of size width x height. `radii[k]` belongs to `placements[k]`.
VerificationReport verify_bin(std::span<const Rational> radii, std::span<const Placement> placements,
                              const Rational& width, const Rational& height, std::size_t bin_index = 0);

// Exact check of containment and non-overlap against the packing's bin size.
// Throws std::invalid_argument for unknown, duplicate or missing circle ids.
VerificationReport verify_packing(const Instance& inst, const Packing& pk);

// Exact test of the eps-packing conditions (distances compared additively).
bool is_epsilon_packing(std::span<const Rational> radii, std::span<const Point2> centers,
                        const Rational& width, const Rational& height, const Rational& eps);

// ceil(sum pi r^2 / (w h)) evaluated with the lower rational bound on pi.
std::int64_t area_lower_bound(const Instance& inst);

}  // namespace circpack

#endif  // CIRCPACK_VERIFY_H_
