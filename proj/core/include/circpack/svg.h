#ifndef CIRCPACK_SVG_H_
#define CIRCPACK_SVG_H_

#include <map>
#include <string>

#include "circpack/packing.h"

namespace circpack {

struct SvgOptions {
  double scale = 200.0;  // pixels per unit length
  int grid_level = 0;    // 0: none; k: square cells of side bin_width / grid_base^k
  int grid_base = 3;
  bool labels = true;
};

// Bins side by side, left to right; y axis points up inside each bin. Output
// depends only on the arguments.
std::string render_svg(const Packing& packing, const std::map<int, Rational>& radius, const SvgOptions& options);

}  // namespace circpack

#endif  // CIRCPACK_SVG_H_
