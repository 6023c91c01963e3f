#include "circpack/cover_ip.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace circpack {

bool solve_cover_lp(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs,
                    const std::vector<Rational>& upper, std::vector<Rational>& solution, Rational& value) {
  const std::size_t cols = upper.size();
  std::vector<std::vector<Rational>> t;  // dictionary: basic_i = b_i + sum_j t_ij x_j
  std::vector<Rational> b;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("cover LP row has the wrong length");
    t.push_back(rows[i]);
    b.push_back(-rhs[i]);
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (upper[c] < 0) continue;
    std::vector<Rational> row(cols);
    row[c] = -1;
    t.push_back(std::move(row));
    b.push_back(upper[c]);
  }
  const std::size_t m = t.size();
  // Variable numbering: 0..cols-1 structural, cols..cols+m-1 surplus.
  std::vector<std::size_t> basic(m), nonbasic(cols);
  std::iota(basic.begin(), basic.end(), cols);
  std::iota(nonbasic.begin(), nonbasic.end(), 0);
  std::vector<Rational> cbar(cols, Rational(1));
  Rational z0;

  while (true) {
    std::size_t r = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (b[i] < 0 && (r == m || basic[i] < basic[r])) r = i;
    }
    if (r == m) break;
    std::size_t e = cols;
    Rational best_ratio;
    for (std::size_t j = 0; j < cols; ++j) {
      if (t[r][j] <= 0) continue;
      Rational ratio = cbar[j] / t[r][j];
      if (e == cols || ratio < best_ratio || (ratio == best_ratio && nonbasic[j] < nonbasic[e])) {
        e = j;
        best_ratio = ratio;
      }
    }
    if (e == cols) return false;

    const Rational piv = t[r][e];
    b[r] = -b[r] / piv;
    for (std::size_t k = 0; k < cols; ++k) {
      if (k == e) {
        t[r][k] = 1 / piv;
      } else if (t[r][k] != 0) {
        t[r][k] = -t[r][k] / piv;
      }
    }
    const auto& pivot_row = t[r];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      const Rational coef = t[i][e];
      if (coef == 0) continue;
      b[i] += coef * b[r];
      for (std::size_t k = 0; k < cols; ++k) {
        if (k == e) {
          t[i][k] = coef * pivot_row[k];
        } else if (pivot_row[k] != 0) {
          t[i][k] += coef * pivot_row[k];
        }
      }
    }
    const Rational cz = cbar[e];
    z0 += cz * b[r];
    for (std::size_t k = 0; k < cols; ++k) {
      if (k == e) {
        cbar[k] = cz * pivot_row[k];
      } else if (pivot_row[k] != 0) {
        cbar[k] += cz * pivot_row[k];
      }
    }
    std::swap(basic[r], nonbasic[e]);
  }

  solution.assign(cols, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basic[i] < cols) solution[basic[i]] = b[i];
  }
  value = z0;
  return true;
}

namespace {

struct Node {
  Rational bound;
  std::int64_t sequence = 0;
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;  // -1: unbounded
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.sequence > b.sequence;
  }
};

struct LpOutcome {
  bool feasible = false;
  Rational value;                  // includes the fixed lower bounds
  std::vector<Rational> x;         // full vector, lower bounds added back
};

class CoverSolver {
 public:
  CoverSolver(const std::vector<std::vector<std::int64_t>>& a, const std::vector<std::int64_t>& d) : a_(a), d_(d) {}

  LpOutcome solve(const std::vector<std::int64_t>& lower, const std::vector<std::int64_t>& upper) const {
    const std::size_t n = a_.size();
    const std::size_t k = d_.size();
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (upper[c] < 0 || upper[c] > lower[c]) free_cols.push_back(c);
    }
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < k; ++i) {
      std::int64_t residual = d_[i];
      for (std::size_t c = 0; c < n; ++c) residual -= a_[c][i] * lower[c];
      if (residual <= 0) continue;
      std::vector<Rational> row(free_cols.size());
      for (std::size_t j = 0; j < free_cols.size(); ++j) row[j] = Rational(static_cast<long>(a_[free_cols[j]][i]));
      rows.push_back(std::move(row));
      rhs.push_back(Rational(static_cast<long>(residual)));
    }
    std::vector<Rational> ub(free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      const std::size_t c = free_cols[j];
      ub[j] = upper[c] < 0 ? Rational(-1) : Rational(static_cast<long>(upper[c] - lower[c]));
    }
    LpOutcome out;
    std::vector<Rational> y;
    Rational value;
    if (!solve_cover_lp(rows, rhs, ub, y, value)) return out;
    out.feasible = true;
    out.x.assign(n, Rational(0));
    out.value = value;
    for (std::size_t c = 0; c < n; ++c) {
      out.x[c] = Rational(static_cast<long>(lower[c]));
      out.value += out.x[c];
    }
    for (std::size_t j = 0; j < free_cols.size(); ++j) out.x[free_cols[j]] += y[j];
    return out;
  }

 private:
  const std::vector<std::vector<std::int64_t>>& a_;
  const std::vector<std::int64_t>& d_;
};

std::vector<std::int64_t> greedy_cover(const std::vector<std::vector<std::int64_t>>& a,
                                       const std::vector<std::int64_t>& d) {
  std::vector<std::int64_t> x(a.size(), 0);
  std::vector<std::int64_t> rem = d;
  while (std::any_of(rem.begin(), rem.end(), [](std::int64_t v) { return v > 0; })) {
    std::size_t best = a.size();
    std::int64_t best_gain = 0;
    for (std::size_t c = 0; c < a.size(); ++c) {
      std::int64_t gain = 0;
      for (std::size_t i = 0; i < rem.size(); ++i) gain += std::min(a[c][i], std::max<std::int64_t>(rem[i], 0));
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == a.size()) break;
    x[best] += 1;
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] -= a[best][i];
  }
  return x;
}

bool is_integral(const std::vector<Rational>& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.get_den() == 1; });
}

}  // namespace

CoverIPSolution solve_cover_ip(const CoverIPInstance& ip, const CoverIPOptions& options) {
  const std::size_t k = ip.demands.size();
  CoverIPSolution sol;
  sol.multiplicity.assign(ip.configs.size(), 0);
  for (const auto& cfg : ip.configs) {
    if (cfg.counts.size() != k) throw std::invalid_argument("configuration length differs from demands");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (ip.demands[i] < 0) throw std::invalid_argument("negative demand");
    if (ip.demands[i] == 0) continue;
    const bool covered =
        std::any_of(ip.configs.begin(), ip.configs.end(), [&](const Configuration& c) { return c.counts[i] > 0; });
    if (!covered) {
      sol.uncovered_class = static_cast<int>(i);
      return sol;
    }
  }
  sol.feasible = true;
  if (std::all_of(ip.demands.begin(), ip.demands.end(), [](std::int64_t v) { return v == 0; })) {
    sol.optimal = true;
    return sol;
  }

  // Lexicographic configuration order fixes every tie below.
  std::vector<std::size_t> order(ip.configs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return ip.configs[x].counts < ip.configs[y].counts; });
  std::vector<std::vector<std::int64_t>> a;
  for (std::size_t idx : order) {
    std::vector<std::int64_t> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = ip.configs[idx].counts[i];
    a.push_back(std::move(col));
  }
  const std::size_t n = a.size();
  const CoverSolver solver(a, ip.demands);

  std::vector<std::int64_t> incumbent = greedy_cover(a, ip.demands);
  std::int64_t best = std::accumulate(incumbent.begin(), incumbent.end(), std::int64_t{0});

  std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
  std::int64_t sequence = 0;
  Node root;
  root.lower.assign(n, 0);
  root.upper.assign(n, -1);
  LpOutcome root_lp = solver.solve(root.lower, root.upper);
  if (!root_lp.feasible) throw std::logic_error("covering LP infeasible despite coverage");
  sol.lp_bound = root_lp.value;
  {
    std::vector<std::int64_t> rounded(n);
    std::int64_t total = 0;
    for (std::size_t c = 0; c < n; ++c) {
      rounded[c] = ceil_of(root_lp.x[c]).get_si();
      total += rounded[c];
    }
    if (total < best) {
      best = total;
      incumbent = rounded;
    }
  }
  root.bound = root_lp.value;
  root.sequence = sequence++;
  queue.push(root);

  bool exhausted = false;
  while (!queue.empty()) {
    Node node = queue.top();
    queue.pop();
    if (ceil_of(node.bound) >= best) continue;
    if (sol.nodes >= options.node_budget) {
      exhausted = true;
      break;
    }
    ++sol.nodes;
    LpOutcome lp = node.sequence == 0 ? root_lp : solver.solve(node.lower, node.upper);
    if (!lp.feasible || ceil_of(lp.value) >= best) continue;
    if (is_integral(lp.x)) {
      std::int64_t total = 0;
      std::vector<std::int64_t> x(n);
      for (std::size_t c = 0; c < n; ++c) {
        x[c] = lp.x[c].get_num().get_si();
        total += x[c];
      }
      if (total < best) {
        best = total;
        incumbent = x;
      }
      continue;
    }
    std::size_t branch = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (lp.x[c].get_den() != 1) {
        branch = c;
        break;
      }
    }
    const std::int64_t fl = floor_of(lp.x[branch]).get_si();
    Node up = node;
    up.lower[branch] = fl + 1;
    up.bound = lp.value;
    up.sequence = sequence++;
    queue.push(std::move(up));
    Node down = node;
    down.upper[branch] = fl;
    down.bound = lp.value;
    down.sequence = sequence++;
    queue.push(std::move(down));
  }

  sol.optimal = !exhausted;
  sol.bins = best;
  for (std::size_t c = 0; c < n; ++c) sol.multiplicity[order[c]] = incumbent[c];
  return sol;
}

CoverIPSolution solve_cover_ip_enumerate(const CoverIPInstance& ip, std::int64_t max_total) {
  const std::size_t k = ip.demands.size();
  const std::size_t n = ip.configs.size();
  CoverIPSolution sol;
  sol.multiplicity.assign(n, 0);
  std::vector<std::int64_t> x(n, 0), best_x;
  std::int64_t best = max_total + 1;
  std::vector<std::int64_t> covered(k, 0);

  auto satisfied = [&] {
    for (std::size_t i = 0; i < k; ++i) {
      if (covered[i] < ip.demands[i]) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t c, std::int64_t used) -> void {
    if (satisfied()) {
      if (used < best) {
        best = used;
        best_x = x;
      }
      return;
    }
    if (c == n || used + 1 >= best) return;
    for (std::int64_t m = best - used - 1; m >= 0; --m) {
      x[c] = m;
      for (std::size_t i = 0; i < k; ++i) covered[i] += m * ip.configs[c].counts[i];
      self(self, c + 1, used + m);
      for (std::size_t i = 0; i < k; ++i) covered[i] -= m * ip.configs[c].counts[i];
    }
    x[c] = 0;
  };
  search(search, 0, 0);
  if (best <= max_total) {
    sol.feasible = true;
    sol.optimal = true;
    sol.bins = best;
    sol.multiplicity = best_x;
  }
  return sol;
}

}  // namespace circpack
