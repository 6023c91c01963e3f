#include "circpack/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "circpack/verify.h"

namespace circpack {

int Configuration::total() const {
  int sum = 0;
  for (int c : counts) sum += c;
  return sum;
}

std::vector<Rational> slot_radii(const std::vector<Rational>& classes, const Configuration& cfg) {
  if (cfg.counts.size() != classes.size()) throw std::invalid_argument("configuration length differs from classes");
  std::vector<Rational> radii;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (cfg.counts[i] < 0) throw std::invalid_argument("negative configuration count");
    for (int k = 0; k < cfg.counts[i]; ++k) radii.push_back(classes[i]);
  }
  return radii;
}

const char* backend_name(BackendKind kind) {
  return kind == BackendKind::kGrid ? "grid" : "continuous";
}

BackendKind parse_backend(const std::string& name) {
  if (name == "continuous") return BackendKind::kContinuous;
  if (name == "grid") return BackendKind::kGrid;
  throw std::invalid_argument("unknown backend '" + name + "'");
}

Rational snap_step(const Rational& alpha) { return dyadic_step_below(alpha); }

namespace {

bool pair_too_far(const Rational& ri, const Rational& rj, const Rational& w, const Rational& h) {
  const Rational s = ri + rj;
  const Rational dx = w - s;
  const Rational dy = h - s;
  return dx * dx + dy * dy < s * s;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_ - 0x9e3779b97f4a7c15ULL);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

std::uint64_t restart_seed(std::uint64_t seed, const std::vector<Rational>& radii, const Rational& w,
                           const Rational& h, int restart) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  hash = fnv1a(hash, to_string(w));
  hash = fnv1a(hash, to_string(h));
  for (const auto& r : radii) hash = fnv1a(hash, to_string(r));
  return mix64(mix64(seed) ^ hash ^ mix64(static_cast<std::uint64_t>(restart) + 1));
}

// Projected gradient on  sum max(0, r_i + r_j + margin - d_ij)^2  with the
// centers confined to their feasible boxes.
class OverlapSolver {
 public:
  OverlapSolver(std::vector<double> radii, double w, double h)
      : r_(std::move(radii)), n_(r_.size()), w_(w), h_(h) {}

  double penalty(const std::vector<double>& x, double margin, std::vector<double>* grad) const {
    if (grad) grad->assign(2 * n_, 0.0);
    double f = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const double dx = x[2 * i] - x[2 * j];
        const double dy = x[2 * i + 1] - x[2 * j + 1];
        const double need = r_[i] + r_[j] + margin;
        if (std::abs(dx) >= need || std::abs(dy) >= need) continue;
        const double d = std::sqrt(dx * dx + dy * dy);
        const double gap = need - d;
        if (gap <= 0) continue;
        f += gap * gap;
        if (!grad) continue;
        double ux, uy;
        if (d > 1e-300) {
          ux = dx / d;
          uy = dy / d;
        } else {
          ux = (i < j) ? 1.0 : -1.0;
          uy = 0;
        }
        (*grad)[2 * i] -= 2 * gap * ux;
        (*grad)[2 * i + 1] -= 2 * gap * uy;
        (*grad)[2 * j] += 2 * gap * ux;
        (*grad)[2 * j + 1] += 2 * gap * uy;
      }
    }
    return f;
  }

  void project(std::vector<double>& x) const {
    for (std::size_t i = 0; i < n_; ++i) {
      x[2 * i] = std::clamp(x[2 * i], r_[i], std::max(r_[i], w_ - r_[i]));
      x[2 * i + 1] = std::clamp(x[2 * i + 1], r_[i], std::max(r_[i], h_ - r_[i]));
    }
  }

  // Returns the best penalty reached; x holds the corresponding iterate.
  double minimize(std::vector<double>& x, double margin, int iterations) const {
    project(x);
    std::vector<double> g, g_new, x_new(2 * n_);
    double f = penalty(x, margin, &g);
    std::vector<double> best = x;
    double f_best = f;
    double step = 0.25;
    int since_improvement = 0;
    for (int it = 0; it < iterations && f_best > 0; ++it) {
      for (std::size_t k = 0; k < 2 * n_; ++k) x_new[k] = x[k] - step * g[k];
      project(x_new);
      const double f_new = penalty(x_new, margin, &g_new);
      double ss = 0, sy = 0;
      for (std::size_t k = 0; k < 2 * n_; ++k) {
        const double s = x_new[k] - x[k];
        const double y = g_new[k] - g[k];
        ss += s * s;
        sy += s * y;
      }
      x.swap(x_new);
      g.swap(g_new);
      f = f_new;
      if (f < f_best * (1 - 1e-9)) {
        f_best = f;
        best = x;
        since_improvement = 0;
      } else if (++since_improvement > 150) {
        break;
      }
      if (ss == 0) break;
      step = sy > 0 ? std::clamp(ss / sy, 1e-6, 10.0) : 0.25;
    }
    x = best;
    return f_best;
  }

 private:
  std::vector<double> r_;
  std::size_t n_;
  double w_;
  double h_;
};

Rational snap_coordinate(double v, const Rational& lo, const Rational& hi, const Rational& step) {
  Rational q = round_to_step(Rational(v), step);
  if (q < lo) q = ceil_to_step(lo, step);
  if (q > hi) q = floor_to_step(hi, step);
  if (q < lo || q > hi) q = (lo + hi) / 2;
  return q;
}

OracleVerdict feasible_verdict(const std::vector<Rational>& radii, std::vector<Point2> centers, const Rational& w,
                               const Rational& h, const Rational& alpha, bool exact, int restart) {
  OracleVerdict v;
  v.kind = OracleVerdict::Kind::kFeasible;
  v.exact = exact;
  v.restart = restart;
  v.packing.radii = radii;
  v.packing.w = w;
  v.packing.h = h;
  v.packing.epsilon = 4 * alpha / h;
  for (std::size_t k = 0; k < centers.size(); ++k) v.packing.placements.push_back({static_cast<int>(k), centers[k]});
  return v;
}

bool exact_packing(const std::vector<Rational>& radii, const std::vector<Point2>& centers, const Rational& w,
                   const Rational& h) {
  std::vector<Placement> placements;
  placements.reserve(centers.size());
  for (std::size_t k = 0; k < centers.size(); ++k) placements.push_back({static_cast<int>(k), centers[k]});
  return verify_bin(radii, placements, w, h).valid;
}

}  // namespace

std::optional<OracleVerdict> infeasibility_prepass(const std::vector<Rational>& radii, const Rational& w,
                                                   const Rational& h) {
  Rational sum;
  for (const auto& r : radii) sum += r * r;
  if (pi_lower() * sum > w * h) {
    OracleVerdict v;
    v.kind = OracleVerdict::Kind::kProvenInfeasible;
    v.certificate = OracleVerdict::Certificate::kAreaExceeded;
    return v;
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t j = i + 1; j < radii.size(); ++j) {
      if (pair_too_far(radii[i], radii[j], w, h)) {
        OracleVerdict v;
        v.kind = OracleVerdict::Kind::kProvenInfeasible;
        v.certificate = OracleVerdict::Certificate::kPairwiseLowerBound;
        v.pair_i = static_cast<int>(i);
        v.pair_j = static_cast<int>(j);
        return v;
      }
    }
  }
  return std::nullopt;
}

bool certificate_holds(const OracleVerdict& verdict, const std::vector<Rational>& radii, const Rational& w,
                       const Rational& h) {
  if (verdict.kind != OracleVerdict::Kind::kProvenInfeasible) return false;
  switch (verdict.certificate) {
    case OracleVerdict::Certificate::kAreaExceeded: {
      Rational sum;
      for (const auto& r : radii) sum += r * r;
      return pi_lower() * sum > w * h;
    }
    case OracleVerdict::Certificate::kPairwiseLowerBound: {
      const int n = static_cast<int>(radii.size());
      if (verdict.pair_i < 0 || verdict.pair_j < 0 || verdict.pair_i >= n || verdict.pair_j >= n ||
          verdict.pair_i == verdict.pair_j) {
        return false;
      }
      return pair_too_far(radii[verdict.pair_i], radii[verdict.pair_j], w, h);
    }
    case OracleVerdict::Certificate::kNone:
      return false;
  }
  return false;
}

OracleVerdict continuous_backend(const std::vector<Rational>& radii, const Rational& w, const Rational& h,
                                 const Rational& alpha, const BackendOptions& options) {
  const std::size_t n = radii.size();
  if (n == 0) return feasible_verdict(radii, {}, w, h, alpha, true, 0);
  std::vector<double> rd(n);
  for (std::size_t k = 0; k < n; ++k) rd[k] = radii[k].get_d();
  const double wd = w.get_d();
  const double hd = h.get_d();
  const OverlapSolver solver(rd, wd, hd);
  const Rational step = snap_step(alpha);
  const Rational slack = 4 * alpha;
  // Rounding moves a center by at most step/sqrt(2) <= alpha/sqrt(2), so a
  // margin of 3 alpha / 2 survives the snap; the absolute floor keeps the
  // margin above double round-off when alpha is tiny.
  const double margin_a = std::max(1.5 * alpha.get_d(), 1e-9 * std::max(wd, hd));

  auto snap = [&](const std::vector<double>& x) {
    std::vector<Point2> centers(n);
    for (std::size_t k = 0; k < n; ++k) {
      centers[k].x = snap_coordinate(x[2 * k], radii[k], w - radii[k], step);
      centers[k].y = snap_coordinate(x[2 * k + 1], radii[k], h - radii[k], step);
    }
    return centers;
  };

  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    SplitMix rng(restart_seed(options.seed, radii, w, h, restart));
    std::vector<double> x(2 * n);
    auto random_center = [&](std::size_t k, double& cx, double& cy) {
      cx = rd[k] + std::max(0.0, wd - 2 * rd[k]) * rng.uniform();
      cy = rd[k] + std::max(0.0, hd - 2 * rd[k]) * rng.uniform();
    };
    // Hinted restarts keep the given centers and drop each remaining circle
    // at the least-overlapping of a few random spots; the last restart is
    // fully random.
    const bool hinted = !options.hint.empty() && (restart + 1 < options.restarts || restart == 0);
    const std::size_t fixed = hinted ? std::min(n, options.hint.size()) : 0;
    for (std::size_t k = 0; k < fixed; ++k) {
      x[2 * k] = options.hint[k].first;
      x[2 * k + 1] = options.hint[k].second;
    }
    for (std::size_t k = fixed; k < n; ++k) {
      const int samples = fixed > 0 ? 24 : 1;
      double best = std::numeric_limits<double>::infinity();
      for (int s = 0; s < samples; ++s) {
        double cx, cy;
        random_center(k, cx, cy);
        double overlap = 0;
        for (std::size_t j = 0; j < k; ++j) {
          const double d = std::hypot(cx - x[2 * j], cy - x[2 * j + 1]);
          overlap += std::max(0.0, rd[j] + rd[k] - d);
        }
        if (overlap < best) {
          best = overlap;
          x[2 * k] = cx;
          x[2 * k + 1] = cy;
        }
      }
    }

    solver.minimize(x, margin_a, options.iterations);
    std::vector<Point2> centers = snap(x);
    if (exact_packing(radii, centers, w, h)) return feasible_verdict(radii, centers, w, h, alpha, true, restart);
    if (options.require_exact) continue;
    if (is_epsilon_packing(radii, centers, w, h, slack)) {
      return feasible_verdict(radii, centers, w, h, alpha, false, restart);
    }
    const double f = solver.minimize(x, 0.0, options.iterations);
    const double a = alpha.get_d();
    if (f > a * a) continue;
    centers = snap(x);
    if (exact_packing(radii, centers, w, h)) return feasible_verdict(radii, centers, w, h, alpha, true, restart);
    if (is_epsilon_packing(radii, centers, w, h, slack)) {
      return feasible_verdict(radii, centers, w, h, alpha, false, restart);
    }
  }
  return OracleVerdict{};
}

OracleVerdict grid_backend(const std::vector<Rational>& radii, const Rational& w, const Rational& h,
                           const Rational& alpha, const BackendOptions& options) {
  const std::size_t n = radii.size();
  if (n > 5) throw std::invalid_argument("grid backend handles at most five circles");
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (n == 0) return feasible_verdict(radii, {}, w, h, alpha, true, 0);

  auto axis = [&](const Rational& lo, const Rational& hi) {
    std::vector<Rational> values;
    if (hi < lo) return values;
    for (Rational v = ceil_to_step(lo, alpha); v <= hi; v += alpha) values.push_back(v);
    values.push_back(lo);
    values.push_back(hi);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  };
  // Rough size guard before materialising candidate lists.
  const Rational per_axis = (std::max(w, h) / alpha) + 3;
  if (per_axis > 1'000'000) return OracleVerdict{};

  std::vector<std::vector<Rational>> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = axis(radii[k], w - radii[k]);
    ys[k] = axis(radii[k], h - radii[k]);
  }

  std::vector<Point2> centers(n);
  std::vector<std::pair<std::size_t, std::size_t>> chosen(n);
  std::int64_t nodes = 0;
  bool exhausted = false;

  auto fits = [&](std::size_t k, const Point2& p) {
    for (std::size_t j = 0; j < k; ++j) {
      const Rational s = radii[j] + radii[k];
      if (dist_sq(centers[j], p) < s * s) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    std::size_t ix0 = 0, iy0 = 0;
    const bool same_class = k > 0 && radii[k] == radii[k - 1];
    if (same_class) {
      ix0 = chosen[k - 1].first;
      iy0 = chosen[k - 1].second + 1;
    }
    for (std::size_t ix = ix0; ix < xs[k].size(); ++ix) {
      for (std::size_t iy = (ix == ix0 ? iy0 : 0); iy < ys[k].size(); ++iy) {
        if (++nodes > options.grid_node_budget) {
          exhausted = true;
          return false;
        }
        const Point2 p{xs[k][ix], ys[k][iy]};
        if (!fits(k, p)) continue;
        centers[k] = p;
        chosen[k] = {ix, iy};
        if (self(self, k + 1)) return true;
        if (exhausted) return false;
      }
    }
    return false;
  };

  if (search(search, 0)) return feasible_verdict(radii, centers, w, h, alpha, true, 0);
  return OracleVerdict{};
}

OracleVerdict check_configuration(const std::vector<Rational>& classes, const Configuration& cfg, const Rational& w,
                                  const Rational& h, const Rational& alpha, const BackendOptions& options) {
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  if (w <= 0 || h <= 0) throw std::invalid_argument("bin dimensions must be positive");
  const Rational limit = std::min(w, h);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] <= 0 || 2 * classes[i] > limit) {
      if (i < cfg.counts.size() && cfg.counts[i] > 0) throw std::invalid_argument("radius class does not fit the bin");
    }
  }
  const std::vector<Rational> radii = slot_radii(classes, cfg);
  if (auto certificate = infeasibility_prepass(radii, w, h)) return *certificate;
  OracleVerdict verdict = options.kind == BackendKind::kGrid ? grid_backend(radii, w, h, alpha, options)
                                                             : continuous_backend(radii, w, h, alpha, options);
  if (verdict.feasible()) {
    std::vector<Point2> centers;
    for (const auto& p : verdict.packing.placements) centers.push_back(p.center);
    const bool ok = verdict.exact ? exact_packing(radii, centers, w, h)
                                  : is_epsilon_packing(radii, centers, w, h, 4 * alpha);
    if (!ok) throw std::logic_error("oracle backend returned an unverified placement");
  }
  return verdict;
}

}  // namespace circpack
