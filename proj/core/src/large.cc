#include "circpack/large.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "circpack/verify.h"

namespace circpack {

LargeParams large_params(const Rational& w, const Rational& h, const Rational& delta, const Rational& epsilon,
                         const Rational& gamma) {
  if (delta <= 0 || epsilon <= 0 || gamma <= 0) throw std::invalid_argument("large: parameters must be positive");
  LargeParams p;
  p.delta = delta;
  p.epsilon = epsilon;
  p.gamma = gamma;
  const Rational area = pi_lower() * delta * delta;
  p.M = ceil_of(w * h / area).get_si();
  p.K_cap = ceil_of(2 / (epsilon * area));
  return p;
}

std::vector<Configuration> maximal_configurations(std::vector<Configuration> configs) {
  std::sort(configs.begin(), configs.end());
  configs.erase(std::unique(configs.begin(), configs.end()), configs.end());
  std::vector<Configuration> kept;
  for (std::size_t a = 0; a < configs.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < configs.size() && !dominated; ++b) {
      if (a == b) continue;
      bool ge = true;
      for (std::size_t i = 0; i < configs[a].counts.size() && ge; ++i) {
        ge = configs[b].counts[i] >= configs[a].counts[i];
      }
      dominated = ge;
    }
    if (!dominated && configs[a].total() > 0) kept.push_back(configs[a]);
  }
  return kept;
}

namespace {

std::vector<std::pair<double, double>> hint_from(const OracleVerdict& v) {
  std::vector<std::pair<double, double>> hint;
  for (const auto& p : v.packing.placements) hint.emplace_back(p.center.x.get_d(), p.center.y.get_d());
  return hint;
}

class ConfigurationSearch {
 public:
  ConfigurationSearch(const std::vector<Rational>& classes, const std::vector<std::int64_t>& demand,
                      const Rational& w, const Rational& h, const Rational& alpha, const LargeOptions& options)
      : classes_(classes), demand_(demand), w_(w), h_(h), alpha_(alpha), options_(options) {
    for (const auto& r : classes_) sq_.push_back(pi_lower() * r * r);
  }

  std::int64_t calls() const { return calls_; }
  const OracleVerdict& verdict(const Configuration& c) const { return cache_.at(c.counts); }

  bool area_ok(const std::vector<int>& counts) const {
    Rational area;
    for (std::size_t i = 0; i < counts.size(); ++i) area += counts[i] * sq_[i];
    return area <= w_ * h_;
  }

  const OracleVerdict& check(const Configuration& c, const Configuration* parent) {
    auto it = cache_.find(c.counts);
    if (it != cache_.end()) return it->second;
    BackendOptions opts = options_.backend;
    opts.hint.clear();
    if (parent != nullptr) {
      auto p = cache_.find(parent->counts);
      if (p != cache_.end() && p->second.feasible()) opts.hint = hint_from(p->second);
    }
    if (opts.kind == BackendKind::kGrid && c.total() > 5) opts.kind = BackendKind::kContinuous;
    ++calls_;
    return cache_.emplace(c.counts, check_configuration(classes_, c, w_, h_, alpha_, opts)).first->second;
  }

  // Number of area-admissible nonzero count vectors, stopping at limit + 1.
  std::int64_t count_admissible(std::int64_t limit) const {
    std::int64_t count = 0;
    std::vector<int> c(classes_.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, const Rational& area) -> void {
      if (count > limit + 1) return;
      if (i == classes_.size()) {
        ++count;
        return;
      }
      Rational a = area;
      for (std::int64_t k = 0; k <= demand_[i]; ++k) {
        if (k > 0) a += sq_[i];
        if (a > w_ * h_) break;
        self(self, i + 1, a);
        if (count > limit + 1) return;
      }
    };
    rec(rec, 0, Rational(0));
    return count - 1;  // the zero vector
  }

  std::vector<Configuration> enumerate_all() {
    std::vector<Configuration> feasible;
    Configuration c;
    c.counts.assign(classes_.size(), 0);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == classes_.size()) {
        if (c.total() == 0) return;
        std::size_t last = 0;
        for (std::size_t j = 0; j < c.counts.size(); ++j) {
          if (c.counts[j] > 0) last = j;
        }
        for (std::size_t j = 0; j < c.counts.size(); ++j) {
          if (c.counts[j] == 0) continue;
          Configuration sub = c;
          --sub.counts[j];
          if (sub.total() == 0) continue;
          auto it = cache_.find(sub.counts);
          if (it == cache_.end() || !it->second.feasible()) return;
        }
        Configuration parent = c;
        --parent.counts[last];
        if (check(c, &parent).feasible()) feasible.push_back(c);
        return;
      }
      for (std::int64_t k = 0; k <= demand_[i]; ++k) {
        c.counts[i] = static_cast<int>(k);
        if (!area_ok(c.counts)) break;
        self(self, i + 1);
      }
      c.counts[i] = 0;
    };
    rec(rec, 0);
    return feasible;
  }

  std::vector<Configuration> grow_greedily() {
    std::vector<Configuration> generated;
    std::vector<std::int64_t> rem = demand_;
    const std::size_t k = classes_.size();
    while (std::any_of(rem.begin(), rem.end(), [](std::int64_t v) { return v > 0; })) {
      Configuration cfg;
      cfg.counts.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        while (cfg.counts[i] < rem[i]) {
          Configuration next = cfg;
          ++next.counts[i];
          if (!area_ok(next.counts)) break;
          if (!check(next, cfg.total() > 0 ? &cfg : nullptr).feasible()) break;
          cfg = next;
        }
      }
      if (cfg.total() == 0) break;  // nothing certifiable remains; singletons decide
      std::int64_t copies = -1;
      for (std::size_t i = 0; i < k; ++i) {
        if (cfg.counts[i] == 0) continue;
        const std::int64_t c = rem[i] / cfg.counts[i];
        copies = copies < 0 ? c : std::min(copies, c);
      }
      copies = std::max<std::int64_t>(copies, 1);
      for (std::size_t i = 0; i < k; ++i) rem[i] -= copies * cfg.counts[i];
      generated.push_back(cfg);
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (demand_[i] == 0) continue;
      Configuration single;
      single.counts.assign(k, 0);
      single.counts[i] = 1;
      if (check(single, nullptr).feasible()) generated.push_back(single);
    }
    return generated;
  }

 private:
  const std::vector<Rational>& classes_;
  const std::vector<std::int64_t>& demand_;
  Rational w_, h_, alpha_;
  const LargeOptions& options_;
  std::vector<Rational> sq_;
  std::map<std::vector<int>, OracleVerdict> cache_;
  std::int64_t calls_ = 0;
};

void check_output(const Instance& inst, const Packing& pk, const char* what) {
  if (!verify_packing(inst, pk).valid) throw std::logic_error(std::string(what) + " produced an invalid packing");
}

}  // namespace

FixedRadiiResult pack_fixed_radii(const Instance& inst, const Rational& delta, const Rational& gamma,
                                  const LargeOptions& options) {
  inst.validate();
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  FixedRadiiResult result;
  result.packing.bin_width = inst.w;
  result.packing.bin_height = (1 + gamma) * inst.h;
  if (inst.circles.empty()) {
    result.ip_optimal = true;
    result.enumerated = true;
    return result;
  }
  for (const auto& c : inst.circles) {
    if (c.radius < delta) throw std::invalid_argument("circle below the minimum radius delta");
  }

  std::vector<Rational> classes;
  for (const auto& c : inst.circles) classes.push_back(c.radius);
  std::sort(classes.begin(), classes.end(), std::greater<>());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  std::vector<std::int64_t> demand(classes.size(), 0);
  std::vector<std::deque<int>> ids(classes.size());
  {
    std::vector<Circle> sorted = inst.circles;
    std::sort(sorted.begin(), sorted.end(), [](const Circle& a, const Circle& b) { return a.id < b.id; });
    for (const auto& c : sorted) {
      const std::size_t i = std::lower_bound(classes.begin(), classes.end(), c.radius, std::greater<>()) -
                            classes.begin();
      ++demand[i];
      ids[i].push_back(c.id);
    }
  }

  const LargeParams params = large_params(inst.w, inst.h, delta, Rational(1), gamma);
  const Rational M(static_cast<long>(params.M));
  const Rational eps_prime = gamma * gamma / (6 * M * M);
  const Rational alpha = eps_prime * inst.h / 4;

  ConfigurationSearch search(classes, demand, inst.w, inst.h, alpha, options);
  std::vector<Configuration> candidates;
  if (search.count_admissible(options.enumeration_cap) <= options.enumeration_cap) {
    candidates = search.enumerate_all();
    result.enumerated = true;
  } else {
    candidates = search.grow_greedily();
  }
  result.classes = classes;
  result.configs = maximal_configurations(candidates);

  CoverIPInstance ip{result.configs, demand};
  CoverIPSolution sol = solve_cover_ip(ip, options.ip);
  result.oracle_calls = search.calls();
  if (!sol.feasible) throw OracleIncompleteness(options.context, classes[sol.uncovered_class]);
  result.multiplicity = sol.multiplicity;
  result.ip_optimal = sol.optimal;

  const Rational height = result.packing.bin_height;
  for (std::size_t c = 0; c < result.configs.size(); ++c) {
    if (sol.multiplicity[c] == 0) continue;
    const OracleVerdict& v = search.verdict(result.configs[c]);
    BinContent layout;
    if (v.exact) {
      layout.placements = v.packing.placements;
    } else {
      RepairResult repaired = repair_packing(v.packing);
      if (repaired.height > height) throw std::logic_error("repaired configuration exceeds the augmented bin");
      layout = std::move(repaired.content);
    }
    std::vector<std::size_t> slot_class;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (int k = 0; k < result.configs[c].counts[i]; ++k) slot_class.push_back(i);
    }
    for (std::int64_t copy = 0; copy < sol.multiplicity[c]; ++copy) {
      BinContent bin;
      for (std::size_t s = 0; s < slot_class.size(); ++s) {
        auto& queue = ids[slot_class[s]];
        if (queue.empty()) continue;
        bin.placements.push_back({queue.front(), layout.placements[s].center});
        queue.pop_front();
      }
      if (!bin.placements.empty()) result.packing.bins.push_back(std::move(bin));
    }
  }
  check_output(inst, result.packing, "pack_fixed_radii");
  return result;
}

LargeResult pack_large(const Instance& inst, const Rational& delta, const Rational& epsilon, const Rational& gamma,
                       const LargeOptions& options) {
  inst.validate();
  LargeResult result;
  result.packing.bin_width = inst.w;
  result.packing.bin_height = (1 + gamma) * inst.h;
  if (inst.circles.empty()) return result;
  const LargeParams params = large_params(inst.w, inst.h, delta, epsilon, gamma);
  const std::size_t n = inst.circles.size();

  if (BigInt(static_cast<unsigned long>(n)) <= params.K_cap) {
    FixedRadiiResult fixed = pack_fixed_radii(inst, delta, gamma, options);
    result.packing = std::move(fixed.packing);
    result.rounded_bins = static_cast<std::int64_t>(result.packing.bins.size());
    for (const auto& c : inst.circles) result.surrogate[c.id] = c.radius;
    return result;
  }

  std::vector<Circle> sorted = inst.circles;
  std::sort(sorted.begin(), sorted.end(), [](const Circle& a, const Circle& b) {
    if (a.radius != b.radius) return a.radius > b.radius;
    return a.id < b.id;
  });
  const std::int64_t q =
      std::max<std::int64_t>(1, floor_of(epsilon * static_cast<long>(n) * pi_lower() * delta * delta).get_si());
  result.group_size = q;
  const std::size_t groups = (n + q - 1) / q;
  auto member = [&](std::size_t g, std::size_t pos) -> const Circle* {
    const std::size_t idx = g * q + pos;
    return (pos < static_cast<std::size_t>(q) && idx < n) ? &sorted[idx] : nullptr;
  };

  // Surrogates: group g (all but the last) rounded down to its minimum; the
  // circles of group g + 1 take their places.
  Instance rounded;
  rounded.w = inst.w;
  rounded.h = inst.h;
  for (std::size_t g = 0; g + 1 < groups; ++g) {
    const Rational& min_r = sorted[g * q + q - 1].radius;
    for (std::int64_t pos = 0; pos < q; ++pos) rounded.circles.push_back({static_cast<int>(g * q + pos), min_r});
  }
  LargeOptions sub = options;
  sub.context = options.context + "/grouped";
  FixedRadiiResult fixed = pack_fixed_radii(rounded, delta, gamma, sub);
  result.rounded_bins = static_cast<std::int64_t>(fixed.packing.bins.size());
  for (const auto& bin : fixed.packing.bins) {
    BinContent out;
    for (const auto& p : bin.placements) {
      const std::size_t g = static_cast<std::size_t>(p.id) / q;
      const std::size_t pos = static_cast<std::size_t>(p.id) % q;
      const Circle* actual = member(g + 1, pos);
      if (actual == nullptr) continue;
      out.placements.push_back({actual->id, p.center});
      result.surrogate[actual->id] = sorted[g * q + q - 1].radius;
    }
    if (!out.placements.empty()) result.packing.bins.push_back(std::move(out));
  }
  for (std::int64_t pos = 0; pos < q && static_cast<std::size_t>(pos) < n; ++pos) {
    const Circle& c = sorted[pos];
    result.packing.bins.push_back(BinContent{{{c.id, Point2{inst.w / 2, inst.h / 2}}}});
    result.surrogate[c.id] = c.radius;
    ++result.first_group_bins;
  }
  check_output(inst, result.packing, "pack_large");
  return result;
}

namespace {

struct RoundDownGeometry {
  Rational alpha;
  Rational lift_step;
  Rational height;
};

RoundDownGeometry rounddown_geometry(const Rational& w, const Rational& h, const Rational& delta,
                                     const Rational& epsilon) {
  const LargeParams params = large_params(w, h, delta, epsilon, epsilon);
  const Rational M(static_cast<long>(params.M));
  RoundDownGeometry g;
  g.alpha = epsilon * epsilon / (6 * M * M);
  const Rational lifted_h = (1 + epsilon) * h;
  g.lift_step = sqrt_upper(6 * (2 * g.alpha / lifted_h));
  g.height = (1 + M * g.lift_step) * lifted_h;
  return g;
}

}  // namespace

Rational rounddown_bin_height(const Rational& w, const Rational& h, const Rational& delta, const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  return rounddown_geometry(w, h, delta, epsilon).height;
}

RoundDownResult pack_large_rounddown(const Instance& inst, const Rational& delta, const Rational& epsilon,
                                     const LargeOptions& options) {
  inst.validate();
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  RoundDownResult result;
  const RoundDownGeometry g = rounddown_geometry(inst.w, inst.h, delta, epsilon);
  result.alpha = g.alpha;
  const Rational lifted_h = (1 + epsilon) * inst.h;
  const Rational eps_rel = 2 * result.alpha / lifted_h;
  result.lift_step = g.lift_step;
  result.packing.bin_width = inst.w;
  result.packing.bin_height = g.height;
  if (inst.circles.empty()) return result;

  Instance rounded = inst;
  std::map<int, Rational> original;
  for (auto& c : rounded.circles) {
    if (c.radius < delta) throw std::invalid_argument("circle below the minimum radius delta");
    original[c.id] = c.radius;
    c.radius = delta + floor_of((c.radius - delta) / result.alpha) * result.alpha;
    result.rounded[c.id] = c.radius;
  }
  LargeOptions sub = options;
  sub.context = options.context + "/rounded";
  FixedRadiiResult fixed = pack_fixed_radii(rounded, delta, epsilon, sub);

  for (auto& bin : fixed.packing.bins) {
    std::vector<Rational> radii;
    for (const auto& p : bin.placements) radii.push_back(original.at(p.id));
    if (verify_bin(radii, bin.placements, inst.w, lifted_h).valid) {
      result.packing.bins.push_back(std::move(bin));
      continue;
    }
    EpsilonPacking ep{bin.placements, radii, eps_rel, inst.w, lifted_h};
    RepairResult repaired = repair_packing(ep);
    if (repaired.height > result.packing.bin_height) throw std::logic_error("round-down repair exceeds its bound");
    result.packing.bins.push_back(std::move(repaired.content));
    ++result.repaired_bins;
  }
  check_output(inst, result.packing, "pack_large_rounddown");
  return result;
}

}  // namespace circpack
