#include "circpack/aptas.h"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "circpack/verify.h"

namespace circpack {

namespace {

using Span = std::pair<std::int64_t, std::int64_t>;

void check_r(int r) {
  if (r < 3 || r % 3 != 0) throw std::invalid_argument("r must be a positive multiple of 3");
}

std::int64_t to_int64(const BigInt& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + " does not fit a 64-bit integer");
  return v.get_si();
}

Rational int_q(std::int64_t v) { return Rational(static_cast<long>(v)); }

struct Blocker {
  Point2 center;
  Rational radius;
};

// A cell whose level-(level+1) children are handed out column-major.
struct Range {
  int root = 0;
  int level = 0;
  Point2 origin;
  std::vector<Span> path;
  std::vector<Blocker> blockers;
  std::int64_t col = 0;
  std::int64_t row = 0;
  std::int64_t cached_col = -1;
  std::vector<Span> blocked;
};

class Grid {
 public:
  Grid(const Plan& plan, const Rational& phi) : plan_(plan), phi_(phi) {
    const std::size_t levels = plan.level_width.size();
    for (std::size_t l = 0; l + 1 < levels; ++l) {
      cols_.push_back(to_int64(floor_of(plan.level_width[l] / plan.level_width[l + 1]), "grid columns"));
      rows_.push_back(to_int64(floor_of(plan.level_height[l] / plan.level_height[l + 1]), "grid rows"));
    }
  }

  std::int64_t cols(int l) const { return cols_.at(l); }
  std::int64_t rows(int l) const { return rows_.at(l); }
  const Rational& child_width(int l) const { return plan_.level_width.at(l + 1); }
  Rational child_height(int l) const { return phi_ * plan_.level_height.at(l + 1); }

  // First free level-`target` cell in lexicographic order, or nullopt.
  std::optional<CellRecord> allocate(std::deque<Range>& free, int target) const {
    while (!free.empty()) {
      Range& e = free.front();
      std::int64_t c = 0;
      std::int64_t rw = 0;
      if (!next_free(e, c, rw)) {
        free.pop_front();
        continue;
      }
      Point2 origin{e.origin.x + int_q(c) * child_width(e.level), e.origin.y + int_q(rw) * child_height(e.level)};
      std::vector<Span> path = e.path;
      path.emplace_back(c, rw);
      if (e.level + 1 == target) {
        CellRecord cell;
        cell.root = e.root;
        cell.level = target;
        cell.origin = origin;
        cell.path = std::move(path);
        cell.from_free = true;
        return cell;
      }
      Range sub;
      sub.root = e.root;
      sub.level = e.level + 1;
      sub.origin = origin;
      sub.path = std::move(path);
      free.push_front(std::move(sub));
    }
    return std::nullopt;
  }

 private:
  bool next_free(Range& e, std::int64_t& col, std::int64_t& row) const {
    const std::int64_t ncols = cols(e.level);
    const std::int64_t nrows = rows(e.level);
    while (e.col < ncols) {
      if (e.cached_col != e.col) {
        e.blocked = blocked_rows(e, e.col, nrows);
        e.cached_col = e.col;
      }
      std::int64_t candidate = e.row;
      for (const auto& [a, b] : e.blocked) {
        if (candidate < a) break;
        if (candidate <= b) candidate = b + 1;
      }
      if (candidate < nrows) {
        col = e.col;
        row = candidate;
        e.row = candidate + 1;
        return true;
      }
      ++e.col;
      e.row = 0;
    }
    return false;
  }

  std::vector<Span> blocked_rows(const Range& e, std::int64_t c, std::int64_t nrows) const {
    const Rational& cw = child_width(e.level);
    const Rational x0 = e.origin.x + int_q(c) * cw;
    const Rational x1 = x0 + cw;
    const Rational ch = child_height(e.level);
    std::vector<Span> spans;
    for (const auto& b : e.blockers) {
      if (b.center.x + b.radius <= x0 || b.center.x - b.radius >= x1) continue;
      auto s = disk_row_span(b.center, b.radius, x0, x1, e.origin.y, ch, nrows, false);
      if (s) spans.push_back(*s);
    }
    std::sort(spans.begin(), spans.end());
    std::vector<Span> merged;
    for (const auto& s : spans) {
      if (!merged.empty() && s.first <= merged.back().second + 1) {
        merged.back().second = std::max(merged.back().second, s.second);
      } else {
        merged.push_back(s);
      }
    }
    return merged;
  }

  const Plan& plan_;
  Rational phi_;
  std::vector<std::int64_t> cols_;
  std::vector<std::int64_t> rows_;
};

enum class Variant { kStandard, kResource };

Rational min_radius(const Instance& inst, const std::vector<int>& ids, const Rational& scale,
                    std::vector<Circle>& out) {
  std::map<int, Rational> radius;
  for (const auto& c : inst.circles) radius[c.id] = c.radius;
  Rational delta;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    Rational s = radius.at(ids[k]) / scale;
    if (k == 0 || s < delta) delta = s;
    out.push_back({ids[k], s});
  }
  return delta;
}

// Steps 8 and 9: layers into grid cells. Roots get their output position later.
Algorithm1Result run_layers(const Instance& inst, const Plan& plan, const Rational& phi, Variant variant,
                            const AptasOptions& options) {
  Algorithm1Result res;
  res.plan = plan;
  GridState& st = res.state;
  st.cell_factor = phi;
  std::map<int, Rational> radius_of;
  for (const auto& c : inst.circles) radius_of[c.id] = c.radius;

  const Grid grid(plan, phi);
  const std::size_t L = plan.layers.size();
  st.layer_bins.assign(L, 0);
  st.new_bins.assign(L, 0);
  std::deque<Range> free;

  for (std::size_t j = 0; j < L; ++j) {
    const auto& ids = plan.layers[j];
    if (ids.empty()) continue;
    const Rational& wj = plan.level_width[j];
    const Rational& hj = plan.level_height[j];
    Instance scaled;
    scaled.w = 1;
    scaled.h = hj / wj;
    const Rational delta = min_radius(inst, ids, wj, scaled.circles);
    LargeOptions lo = options.large;
    lo.context = options.large.context + "/layer " + std::to_string(j);
    Packing pj = variant == Variant::kStandard
                     ? pack_large(scaled, delta, plan.epsilon, plan.gamma, lo).packing
                     : pack_large_rounddown(scaled, delta, plan.epsilon, lo).packing;
    if (pj.bin_height > phi * scaled.h) throw std::logic_error("layer bins exceed their grid cells");
    st.layer_bins[j] = static_cast<std::int64_t>(pj.bins.size());

    std::vector<std::size_t> taken;
    std::vector<std::vector<Blocker>> blockers;
    for (const auto& bin : pj.bins) {
      std::optional<CellRecord> cell = grid.allocate(free, static_cast<int>(j));
      if (!cell) {
        RootRecord root;
        root.level = static_cast<int>(j);
        root.width = wj;
        root.height = phi * hj;
        st.roots.push_back(root);
        cell = CellRecord{};
        cell->root = static_cast<int>(st.roots.size() - 1);
        cell->level = static_cast<int>(j);
        ++st.new_bins[j];
      }
      const std::size_t idx = st.cells.size();
      st.cells.push_back(*cell);
      std::vector<Blocker> mine;
      for (const auto& p : bin.placements) {
        PlacedRecord rec;
        rec.id = p.id;
        rec.layer = static_cast<int>(j);
        rec.cell = idx;
        rec.center = st.cells[idx].origin + wj * p.center;
        rec.radius = radius_of.at(p.id);
        mine.push_back({rec.center, rec.radius});
        st.circles.push_back(std::move(rec));
      }
      taken.push_back(idx);
      blockers.push_back(std::move(mine));
    }

    if (j + 1 == L) break;
    // F_{j+1} in lexicographic order: cells taken from F_j precede the
    // untouched remainder of F_j, which precedes the new roots.
    auto as_range = [&](std::size_t k) {
      const CellRecord& c = st.cells[taken[k]];
      Range e;
      e.root = c.root;
      e.level = c.level;
      e.origin = c.origin;
      e.path = c.path;
      e.blockers = std::move(blockers[k]);
      return e;
    };
    std::deque<Range> next;
    for (std::size_t k = 0; k < taken.size(); ++k) {
      if (st.cells[taken[k]].from_free) next.push_back(as_range(k));
    }
    for (auto& e : free) next.push_back(std::move(e));
    for (std::size_t k = 0; k < taken.size(); ++k) {
      if (!st.cells[taken[k]].from_free) next.push_back(as_range(k));
    }
    free = std::move(next);
  }
  return res;
}

std::vector<Circle> circles_of(const Instance& inst, const std::vector<int>& ids) {
  std::vector<Circle> out;
  min_radius(inst, ids, Rational(1), out);
  return out;
}

void emit_layer_circles(const GridState& st, Packing& out) {
  for (const auto& c : st.circles) {
    const RootRecord& root = st.roots.at(st.cells.at(c.cell).root);
    out.bins.at(root.out_bin).placements.push_back({c.id, root.offset + c.center});
  }
}

void finish(const Instance& inst, Packing& out, const char* what) {
  for (auto& bin : out.bins) {
    std::sort(bin.placements.begin(), bin.placements.end(),
              [](const Placement& a, const Placement& b) { return a.id < b.id; });
  }
  const VerificationReport report = verify_packing(inst, out);
  if (!report.valid) {
    throw std::logic_error(std::string(what) + " produced an invalid packing in bin " +
                           std::to_string(report.violations.front().bin));
  }
}

void place_roots_ffdh(GridState& st, const Rational& w, const Rational& H, bool include_level0, Packing& out) {
  std::vector<RectItem> items;
  std::vector<std::size_t> which;
  for (std::size_t k = 0; k < st.roots.size(); ++k) {
    if (!include_level0 && st.roots[k].level == 0) continue;
    items.push_back({k, st.roots[k].width, st.roots[k].height});
    which.push_back(k);
  }
  std::size_t used = 0;
  auto placed = ffdh_pack_rects(items, w, H, used);
  const std::size_t base = out.bins.size();
  out.bins.resize(base + used);
  for (std::size_t i = 0; i < which.size(); ++i) {
    st.roots[which[i]].out_bin = base + placed[i].bin;
    st.roots[which[i]].offset = placed[i].offset;
  }
}

// Lowers circles in order of height to the lowest position above the floor
// and the circles already settled; x never changes, so validity is kept.
void settle_downward(std::vector<Placement>& ps, const std::map<int, Rational>& radius) {
  std::sort(ps.begin(), ps.end(), [](const Placement& a, const Placement& b) {
    if (a.center.y != b.center.y) return a.center.y < b.center.y;
    return a.id < b.id;
  });
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Rational& ri = radius.at(ps[i].id);
    Rational y = ri;
    for (std::size_t k = 0; k < i; ++k) {
      const Rational s = ri + radius.at(ps[k].id);
      const Rational dx = ps[i].center.x - ps[k].center.x;
      const Rational gap = s * s - dx * dx;
      if (gap <= 0) continue;
      const Rational need = ps[k].center.y + sqrt_upper(gap);
      if (need > y) y = need;
    }
    if (y < ps[i].center.y) ps[i].center.y = y;
  }
}

}  // namespace

std::int64_t layer_of_group(int group, int t, int r) {
  if (group < t) return 0;
  if ((group - t) % r == 0) return -1;
  return (group - t - 1) / r + 1;
}

Plan build_plan(const Instance& inst, int r, const Rational& gamma, TRule rule) {
  check_r(r);
  inst.validate();
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  Plan plan;
  plan.r = r;
  plan.epsilon = Rational(1, r);
  plan.gamma = gamma;
  plan.unit = std::min(inst.w, inst.h);
  const Rational eps2 = plan.epsilon * plan.epsilon;

  int max_group = -1;
  for (const auto& c : inst.circles) {
    const Rational d = 2 * c.radius;
    Rational threshold = plan.unit * eps2;
    int i = 0;
    while (!(d > threshold)) {
      threshold *= eps2;
      ++i;
    }
    plan.group_of.push_back(i);
    max_group = std::max(max_group, i);
  }
  plan.groups.resize(static_cast<std::size_t>(max_group + 1));
  plan.bunches.resize(static_cast<std::size_t>(r));
  std::vector<Rational> mass(static_cast<std::size_t>(r));
  Rational total;
  for (std::size_t k = 0; k < inst.circles.size(); ++k) {
    const int g = plan.group_of[k];
    plan.groups[g].push_back(inst.circles[k].id);
    const Rational sq = inst.circles[k].radius * inst.circles[k].radius;
    mass[g % r] += sq;
    total += sq;
  }
  for (int i = 0; i <= max_group; ++i) {
    auto& b = plan.bunches[i % r];
    b.insert(b.end(), plan.groups[i].begin(), plan.groups[i].end());
  }

  // Area(H_j) <= eps Area(C) compares the same multiple of pi on both sides.
  plan.t = -1;
  for (int j = 0; j < r && plan.t < 0; ++j) {
    if (mass[j] <= plan.epsilon * total) plan.t = j;
  }
  if (rule == TRule::kPositive && plan.t == 0) {
    plan.t = -1;
    for (int j = 1; j < r && plan.t < 0; ++j) {
      if (mass[j] <= 2 * plan.epsilon * total) plan.t = j;
    }
  }
  if (plan.t < 0) throw std::logic_error("no light bunch found");

  for (std::size_t k = 0; k < inst.circles.size(); ++k) {
    const std::int64_t layer = layer_of_group(plan.group_of[k], plan.t, r);
    if (layer < 0) {
      plan.intermediate.push_back(inst.circles[k].id);
      continue;
    }
    if (plan.layers.size() <= static_cast<std::size_t>(layer)) plan.layers.resize(layer + 1);
    plan.layers[layer].push_back(inst.circles[k].id);
  }
  for (std::size_t j = 0; j <= plan.layers.size(); ++j) {
    if (j == 0) {
      plan.level_width.push_back(inst.w);
      plan.level_height.push_back(inst.h);
      continue;
    }
    const unsigned e = static_cast<unsigned>(2 * (plan.t + (static_cast<int>(j) - 1) * r) + 1);
    const Rational side = pow(plan.epsilon, e) * plan.unit;
    plan.level_width.push_back(side);
    plan.level_height.push_back(side);
  }
  return plan;
}

std::vector<RectPlacement> ffdh_pack_rects(const std::vector<RectItem>& items, const Rational& w, const Rational& H,
                                           std::size_t& bins_used) {
  for (const auto& it : items) {
    if (it.width <= 0 || it.height <= 0 || it.width > w || it.height > H) {
      throw std::invalid_argument("ffdh: item " + std::to_string(it.key) + " does not fit the bin");
    }
  }
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (items[a].height != items[b].height) return items[a].height > items[b].height;
    return items[a].key < items[b].key;
  });
  struct Row {
    Rational y;
    Rational height;
    Rational used;
  };
  std::vector<std::vector<Row>> bins;
  std::vector<RectPlacement> out(items.size());
  for (std::size_t i : order) {
    const RectItem& it = items[i];
    bool done = false;
    for (std::size_t b = 0; b < bins.size() && !done; ++b) {
      for (auto& row : bins[b]) {
        if (it.height <= row.height && row.used + it.width <= w) {
          out[i] = {b, Point2{row.used, row.y}};
          row.used += it.width;
          done = true;
          break;
        }
      }
    }
    for (std::size_t b = 0; b < bins.size() && !done; ++b) {
      const Row& top = bins[b].back();
      const Rational y = top.y + top.height;
      if (y + it.height <= H) {
        bins[b].push_back({y, it.height, it.width});
        out[i] = {b, Point2{Rational(0), y}};
        done = true;
      }
    }
    if (!done) {
      bins.push_back({{Rational(0), it.height, it.width}});
      out[i] = {bins.size() - 1, Point2{Rational(0), Rational(0)}};
    }
  }
  bins_used = bins.size();
  return out;
}

Algorithm1Result run_algorithm1(const Instance& inst, int r, const Rational& gamma, const AptasOptions& options) {
  const Plan plan = build_plan(inst, r, gamma, TRule::kStandard);
  const Rational phi = 1 + gamma;
  Algorithm1Result res = run_layers(inst, plan, phi, Variant::kStandard, options);
  GridState& st = res.state;

  Packing& out = res.packing;
  out.bin_width = inst.w;
  out.bin_height = phi * inst.h;
  for (auto& root : st.roots) {
    if (root.level != 0) continue;
    root.out_bin = out.bins.size();
    root.offset = Point2{};
    out.bins.emplace_back();
  }
  place_roots_ffdh(st, inst.w, out.bin_height, false, out);
  emit_layer_circles(st, out);
  res.main_bins = static_cast<std::int64_t>(out.bins.size());

  if (!plan.intermediate.empty()) {
    NfdhResult shelves = nfdh_pack_circles(circles_of(inst, plan.intermediate), inst.w, phi * inst.h);
    res.intermediate_bins = static_cast<std::int64_t>(shelves.bins.size());
    for (auto& b : shelves.bins) out.bins.push_back(std::move(b));
  }
  finish(inst, out, "run_algorithm1");
  return res;
}

WasteAudit waste_audit(const Algorithm1Result& result, std::int64_t column_cap) {
  WasteAudit audit;
  const Plan& plan = result.plan;
  const GridState& st = result.state;
  const Grid grid(plan, st.cell_factor);
  const Rational pi_lo = pi_lower();
  for (const auto& c : st.circles) {
    const CellRecord& cell = st.cells.at(c.cell);
    const int l = cell.level;
    if (static_cast<std::size_t>(l) + 1 >= plan.level_width.size()) continue;
    const Rational& cw = grid.child_width(l);
    const Rational ch = grid.child_height(l);
    const std::int64_t cols = grid.cols(l);
    const std::int64_t rows = grid.rows(l);
    WasteEntry entry;
    entry.id = c.id;
    entry.layer = c.layer;
    entry.bound = 16 * plan.epsilon * st.cell_factor * pi_lo * c.radius * c.radius;
    const std::int64_t lo =
        std::max<std::int64_t>(0, to_int64(floor_of((c.center.x - c.radius - cell.origin.x) / cw), "column"));
    const std::int64_t hi =
        std::min<std::int64_t>(cols - 1, to_int64(floor_of((c.center.x + c.radius - cell.origin.x) / cw), "column"));
    if (hi - lo + 1 > column_cap) {
      ++audit.skipped;
      continue;
    }
    for (std::int64_t col = lo; col <= hi; ++col) {
      const Rational x0 = cell.origin.x + int_q(col) * cw;
      const Rational x1 = x0 + cw;
      auto meet = disk_row_span(c.center, c.radius, x0, x1, cell.origin.y, ch, rows, false);
      if (!meet) continue;
      std::int64_t count = meet->second - meet->first + 1;
      auto inside = disk_row_span(c.center, c.radius, x0, x1, cell.origin.y, ch, rows, true);
      if (inside) count -= inside->second - inside->first + 1;
      entry.partial_cells += count;
    }
    entry.shell_area = int_q(entry.partial_cells) * cw * ch;
    entry.ok = entry.shell_area <= entry.bound;
    if (!entry.ok) ++audit.violations;
    audit.entries.push_back(std::move(entry));
  }
  return audit;
}

Algorithm1Result pack_bins(const Instance& inst, int r, const Rational& gamma, const AptasOptions& options) {
  check_r(r);
  inst.validate();
  const Rational sub_h = int_q(r) * inst.w;
  if (inst.w > inst.h || inst.h < int_q(r) * sub_h) return run_algorithm1(inst, r, gamma, options);

  Instance sub = inst;
  sub.h = sub_h;
  Algorithm1Result res = run_algorithm1(sub, r, gamma, options);
  const std::int64_t k = to_int64(floor_of(inst.h / sub_h), "stack size");
  const Rational step = (1 + gamma) * sub_h;
  Packing stacked;
  stacked.bin_width = inst.w;
  stacked.bin_height = (1 + gamma) * inst.h;
  for (std::size_t b = 0; b < res.packing.bins.size(); ++b) {
    const std::size_t target = b / static_cast<std::size_t>(k);
    const Rational dy = int_q(static_cast<std::int64_t>(b % static_cast<std::size_t>(k))) * step;
    if (stacked.bins.size() <= target) stacked.bins.resize(target + 1);
    for (const auto& p : res.packing.bins[b].placements) {
      stacked.bins[target].placements.push_back({p.id, Point2{p.center.x, p.center.y + dy}});
    }
  }
  finish(inst, stacked, "pack_bins");
  res.packing = std::move(stacked);
  res.sub_bins_per_bin = k;
  return res;
}

StripResult pack_strip(const std::vector<Circle>& circles, const Rational& w, int r, const Rational& gamma,
                       const AptasOptions& options) {
  check_r(r);
  Instance inst;
  inst.circles = circles;
  inst.w = w;
  inst.h = int_q(r) * w;
  Algorithm1Result res = pack_bins(inst, r, gamma, options);
  const Rational step = res.packing.bin_height;
  StripResult out;
  out.stacked_bins = static_cast<std::int64_t>(res.packing.bins.size());
  out.stack_height = int_q(out.stacked_bins) * step;
  std::map<int, Rational> radius;
  for (const auto& c : circles) radius[c.id] = c.radius;
  BinContent strip;
  for (std::size_t b = 0; b < res.packing.bins.size(); ++b) {
    const Rational dy = int_q(static_cast<std::int64_t>(b)) * step;
    for (const auto& p : res.packing.bins[b].placements) {
      strip.placements.push_back({p.id, Point2{p.center.x, p.center.y + dy}});
    }
  }
  settle_downward(strip.placements, radius);
  out.height = 0;
  for (const auto& p : strip.placements) out.height = std::max(out.height, Rational(p.center.y + radius.at(p.id)));
  out.packing.bin_width = w;
  out.packing.bin_height = out.height;
  if (!strip.placements.empty()) {
    out.packing.bins.push_back(std::move(strip));
    inst.h = out.height;
    finish(inst, out.packing, "pack_strip");
  }
  return out;
}

ResourceResult pack_resource_augmented(const Instance& inst, int r, const AptasOptions& options) {
  check_r(r);
  const Rational eps(1, r);
  const Plan plan = build_plan(inst, r, eps, TRule::kPositive);
  // One cell height factor for all levels: the tallest round-down bin.
  Rational phi = 1 + eps;
  for (std::size_t j = 0; j < plan.layers.size(); ++j) {
    if (plan.layers[j].empty()) continue;
    std::vector<Circle> scaled;
    const Rational delta = min_radius(inst, plan.layers[j], plan.level_width[j], scaled);
    const Rational hs = plan.level_height[j] / plan.level_width[j];
    phi = std::max(phi, Rational(rounddown_bin_height(Rational(1), hs, delta, eps) / hs));
  }

  ResourceResult out;
  out.run = run_layers(inst, plan, phi, Variant::kResource, options);
  out.main_height = (1 + 105 * eps) * phi * inst.h;
  out.strip_height = 11 * eps * inst.h;
  GridState& st = out.run.state;
  Packing& pk = out.run.packing;
  pk.bin_width = inst.w;
  pk.bin_height = out.main_height + out.strip_height;
  place_roots_ffdh(st, inst.w, out.main_height, true, pk);
  emit_layer_circles(st, pk);
  out.run.main_bins = static_cast<std::int64_t>(pk.bins.size());

  if (!plan.intermediate.empty()) {
    NfdhResult strips = nfdh_pack_circles(circles_of(inst, plan.intermediate), inst.w, out.strip_height);
    out.strips = static_cast<std::int64_t>(strips.bins.size());
    out.run.intermediate_bins = out.strips;
    for (std::size_t k = 0; k < strips.bins.size(); ++k) {
      if (pk.bins.size() <= k) pk.bins.resize(k + 1);
      for (const auto& p : strips.bins[k].placements) {
        pk.bins[k].placements.push_back({p.id, Point2{p.center.x, p.center.y + out.main_height}});
      }
    }
  }
  finish(inst, pk, "pack_resource_augmented");
  return out;
}

}  // namespace circpack
