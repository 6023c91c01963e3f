#include "circpack/nfdh.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace circpack {

NfdhResult nfdh_pack_squares(const std::vector<SquareItem>& items, const Rational& w, const Rational& H) {
  if (w <= 0 || H <= 0) throw std::invalid_argument("nfdh: bin dimensions must be positive");
  const Rational limit = std::min(w, H);
  for (const auto& it : items) {
    if (it.side <= 0 || it.side > limit) {
      throw std::invalid_argument("nfdh: box " + std::to_string(it.id) + " does not fit the bin");
    }
  }
  std::vector<SquareItem> sorted = items;
  std::sort(sorted.begin(), sorted.end(), [](const SquareItem& a, const SquareItem& b) {
    if (a.side != b.side) return a.side > b.side;
    return a.id < b.id;
  });

  NfdhResult out;
  out.width = w;
  out.height = H;
  for (const auto& it : sorted) {
    const Rational& s = it.side;
    bool placed = false;
    if (!out.bins.empty()) {
      Shelf& shelf = out.shelves.back().back();
      if (shelf.cursor_x + s <= w) {
        placed = true;
      } else if (shelf.y_base + shelf.height + s <= H) {
        out.shelves.back().push_back({shelf.y_base + shelf.height, s, Rational(0)});
        placed = true;
      }
    }
    if (!placed) {
      out.bins.emplace_back();
      out.sides.emplace_back();
      out.shelves.push_back({{Rational(0), s, Rational(0)}});
    }
    Shelf& shelf = out.shelves.back().back();
    out.bins.back().placements.push_back({it.id, Point2{shelf.cursor_x + s / 2, shelf.y_base + s / 2}});
    out.sides.back().push_back(s);
    shelf.cursor_x += s;
  }
  return out;
}

NfdhResult nfdh_pack_circles(const std::vector<Circle>& circles, const Rational& w, const Rational& H) {
  std::vector<SquareItem> items;
  items.reserve(circles.size());
  for (const auto& c : circles) items.push_back({c.id, 2 * c.radius});
  return nfdh_pack_squares(items, w, H);
}

DensityAudit nfdh_density_audit(const NfdhResult& result) {
  DensityAudit audit;
  if (result.bins.size() < 2) return audit;
  audit.applicable = true;
  const Rational bin_area = result.width * result.height;
  for (std::size_t b = 0; b + 1 < result.bins.size(); ++b) {
    Rational boxes;
    for (const auto& s : result.sides[b]) boxes += s * s;
    const Rational box_density = boxes / bin_area;
    const Rational circle_density = pi_lower() * box_density / 4;
    if (b == 0 || box_density < audit.min_box_density) audit.min_box_density = box_density;
    if (b == 0 || circle_density < audit.min_circle_density) audit.min_circle_density = circle_density;
  }
  return audit;
}

}  // namespace circpack
