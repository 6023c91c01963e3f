#ifndef CIRCPACK_APTAS_H_
#define CIRCPACK_APTAS_H_

#include <cstdint>
#include <vector>

#include "circpack/large.h"
#include "circpack/nfdh.h"

namespace circpack {

struct Plan {
  int r = 3;
  Rational epsilon;  // 1 / r
  Rational gamma;
  Rational unit;     // min(w, h); group thresholds and cell sides scale with it
  int t = 0;
  std::vector<int> group_of;                // per circle, in instance order
  std::vector<std::vector<int>> groups;     // circle ids of G_i
  std::vector<std::vector<int>> bunches;    // circle ids of H_j, 0 <= j < r
  std::vector<std::vector<int>> layers;     // circle ids of S_j
  std::vector<int> intermediate;            // circle ids of H_t
  // Level sizes w_j, h_j for 0 <= j <= layers.size() (one extra level for
  // the grid below the last layer).
  std::vector<Rational> level_width;
  std::vector<Rational> level_height;
};

enum class TRule {
  kStandard,  // smallest t with sum_{H_t} r^2 <= eps sum r^2
  kPositive,  // as above, but t = 0 is replaced by the smallest t' > 0 with 2 eps
};

// r >= 3 and a multiple of 3.
Plan build_plan(const Instance& inst, int r, const Rational& gamma, TRule rule = TRule::kStandard);

std::int64_t layer_of_group(int group, int t, int r);  // -1 for groups of H_t

struct RootRecord {
  int level = 0;          // the layer that created it (its A_j)
  Rational width;
  Rational height;
  std::size_t out_bin = 0;
  Point2 offset;          // lower-left corner inside the output bin
};

struct CellRecord {
  int root = 0;
  int level = 0;
  Point2 origin;          // relative to the root
  std::vector<std::pair<std::int64_t, std::int64_t>> path;  // (column, row) per level below the root
  bool from_free = false;  // taken from F_j rather than opened as a new root
};

struct PlacedRecord {
  int id = 0;
  int layer = 0;
  std::size_t cell = 0;   // index into GridState::cells
  Point2 center;          // relative to the root
  Rational radius;
};

struct GridState {
  std::vector<RootRecord> roots;
  std::vector<CellRecord> cells;     // cells that received a layer bin, in placement order
  std::vector<PlacedRecord> circles; // layer circles (not H_t)
  std::vector<std::int64_t> layer_bins;     // |P_j|
  std::vector<std::int64_t> new_bins;       // |A_j|
  Rational cell_factor;                     // cells at level j are w_j x cell_factor h_j
};

struct AptasOptions {
  LargeOptions large;
};

struct Algorithm1Result {
  Packing packing;
  Plan plan;
  GridState state;
  std::int64_t intermediate_bins = 0;  // bins (or strips) used for H_t
  std::int64_t main_bins = 0;          // bins holding the layer roots
  std::int64_t sub_bins_per_bin = 1;   // > 1 on the tall-bin reduction path
};

// Bins of size w x (1 + gamma) h.
Algorithm1Result run_algorithm1(const Instance& inst, int r, const Rational& gamma, const AptasOptions& options);

struct WasteEntry {
  int id = 0;
  int layer = 0;
  std::int64_t partial_cells = 0;
  Rational shell_area;  // partial cells times the level-(j+1) cell area
  Rational bound;       // 16 eps cell_factor pi_lower r^2
  bool ok = true;
};

struct WasteAudit {
  std::vector<WasteEntry> entries;
  std::int64_t violations = 0;
  std::int64_t skipped = 0;  // circles spanning more than column_cap grid columns
};

WasteAudit waste_audit(const Algorithm1Result& result, std::int64_t column_cap = 100000);

struct RectItem {
  std::size_t key = 0;
  Rational width;
  Rational height;
};

struct RectPlacement {
  std::size_t bin = 0;
  Point2 offset;
};

// First fit decreasing height shelves (ties by key); result aligned with items.
std::vector<RectPlacement> ffdh_pack_rects(const std::vector<RectItem>& items, const Rational& w, const Rational& H,
                                           std::size_t& bins_used);

// Tall bins (h >= r^2 w) are split into w x r w sub-bins which are packed and
// stacked floor(h / (r w)) at a time.
Algorithm1Result pack_bins(const Instance& inst, int r, const Rational& gamma, const AptasOptions& options);

struct StripResult {
  Packing packing;  // one bin: the strip cut at the achieved height
  Rational height;  // max over circles of y + r
  Rational stack_height;  // number of stacked bins times their height
  std::int64_t stacked_bins = 0;
};

// Strip of width w: bins w x r w stacked vertically, then every circle is
// lowered as far as the floor and the circles below it allow.
StripResult pack_strip(const std::vector<Circle>& circles, const Rational& w, int r, const Rational& gamma,
                       const AptasOptions& options);

struct ResourceResult {
  Algorithm1Result run;
  std::int64_t strips = 0;
  Rational main_height;   // (1 + 105 eps) cell_factor h
  Rational strip_height;  // 11 eps h
};

// gamma = eps = 1 / r. Bins of size w x (main_height + strip_height).
ResourceResult pack_resource_augmented(const Instance& inst, int r, const AptasOptions& options);

}  // namespace circpack

#endif  // CIRCPACK_APTAS_H_
