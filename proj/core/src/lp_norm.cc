#include "circpack/lp_norm.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace circpack {

WeightedNorm WeightedNorm::finite(unsigned a, unsigned b, std::vector<Rational> omega) {
  WeightedNorm norm;
  norm.a = a;
  norm.b = b;
  norm.omega = std::move(omega);
  norm.validate();
  return norm;
}

WeightedNorm WeightedNorm::infinity(std::vector<Rational> omega) {
  WeightedNorm norm;
  norm.infinite = true;
  norm.omega = std::move(omega);
  norm.validate();
  return norm;
}

void WeightedNorm::validate() const {
  if (omega.empty()) throw std::invalid_argument("weighted norm needs dimension >= 1");
  for (const auto& w : omega) {
    if (w < 1) throw std::invalid_argument("norm weights must be >= 1");
  }
  if (!infinite) {
    if (a == 0 || b == 0) throw std::invalid_argument("norm exponent a/b needs positive a and b");
    if (a < b) throw std::invalid_argument("norm exponent must be >= 1");
  }
}

namespace {

Rational abs_value(const Rational& v) { return v < 0 ? Rational(-v) : v; }

Ordering from_sign(int s) {
  if (s < 0) return Ordering::kLess;
  if (s > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

Ordering cmp_rational(const Rational& x, const Rational& y) { return from_sign(cmp(x, y)); }

using FieldElement = std::vector<Rational>;  // coefficient per subset mask of radicals

FieldElement multiply(const FieldElement& p, const FieldElement& q, const std::vector<Rational>& radicands) {
  FieldElement out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (q[j] == 0) continue;
      Rational term = p[i] * q[j];
      std::size_t common = i & j;
      for (std::size_t k = 0; common != 0; ++k, common >>= 1) {
        if (common & 1U) term *= radicands[k];
      }
      out[i ^ j] += term;
    }
  }
  return out;
}

// Sign of an element of Q(sqrt(a_0), ..., sqrt(a_{m-1})) with all a_k > 0 and
// no a_k a perfect square.
int field_sign(const FieldElement& element, const std::vector<Rational>& radicands, std::size_t m) {
  if (m == 0) return sgn(element[0]);
  const std::size_t half = std::size_t{1} << (m - 1);
  FieldElement p(element.begin(), element.begin() + static_cast<std::ptrdiff_t>(half));
  FieldElement q(element.begin() + static_cast<std::ptrdiff_t>(half), element.end());
  const int sp = field_sign(p, radicands, m - 1);
  const int sq = field_sign(q, radicands, m - 1);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // p and q*sqrt(a) have opposite signs: compare p^2 with a q^2.
  FieldElement pp = multiply(p, p, radicands);
  FieldElement qq = multiply(q, q, radicands);
  const Rational& a = radicands[m - 1];
  for (std::size_t i = 0; i < half; ++i) pp[i] -= a * qq[i];
  return sp * field_sign(pp, radicands, m - 1);
}

bool all_perfect_powers(const LpLength& length, Rational& sum) {
  sum = 0;
  for (const auto& u : length.components) {
    Rational term = pow(u, length.a);
    Rational root;
    if (length.b == 1) {
      root = term;
    } else {
      Rational lo = root_lower(term, length.b, 8);
      if (pow(lo, length.b) != term) return false;
      root = lo;
    }
    sum += root;
  }
  return true;
}

constexpr unsigned kMaxRefinementBits = 4096;

}  // namespace

namespace detail {

int sign_of_sqrt_sum(const Rational& constant, const std::vector<Rational>& coefficients,
                     const std::vector<Rational>& radicands) {
  Rational folded = constant;
  std::map<Rational, Rational> merged;
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    if (radicands[i] < 0) throw std::domain_error("negative radicand");
    if (coefficients[i] == 0 || radicands[i] == 0) continue;
    Rational root;
    if (exact_sqrt(radicands[i], root)) {
      folded += coefficients[i] * root;
    } else {
      merged[radicands[i]] += coefficients[i];
    }
  }
  std::vector<Rational> rads;
  std::vector<Rational> coefs;
  for (const auto& [rad, coef] : merged) {
    if (coef == 0) continue;
    rads.push_back(rad);
    coefs.push_back(coef);
  }
  const std::size_t m = rads.size();
  FieldElement element(std::size_t{1} << m);
  element[0] = folded;
  for (std::size_t k = 0; k < m; ++k) element[std::size_t{1} << k] = coefs[k];
  return field_sign(element, rads, m);
}

}  // namespace detail

Rational LpLength::integer_power_sum() const {
  if (infinite || b != 1) throw std::logic_error("integer_power_sum needs an integer exponent");
  Rational sum;
  for (const auto& u : components) sum += pow(u, a);
  return sum;
}

bool LpLength::exact_value(Rational& value) const {
  if (infinite) {
    value = 0;
    for (const auto& u : components) value = std::max(value, u);
    return true;
  }
  Rational sum;
  if (!all_perfect_powers(*this, sum)) return false;
  Rational powered = pow(sum, b);
  if (a == 1) {
    value = powered;
    return true;
  }
  Rational lo = root_lower(powered, a, 8);
  if (pow(lo, a) != powered) return false;
  value = lo;
  return true;
}

void LpLength::bounds(unsigned bits, Rational& lo, Rational& hi) const {
  Rational exact;
  if (exact_value(exact)) {
    lo = hi = exact;
    return;
  }
  Rational sum_lo, sum_hi;
  for (const auto& u : components) {
    Rational term = pow(u, a);
    sum_lo += root_lower(term, b, bits);
    sum_hi += root_upper(term, b, bits);
  }
  lo = root_lower(pow(sum_lo, b), a, bits);
  hi = root_upper(pow(sum_hi, b), a, bits);
}

LpLength lp_length(const PointD& x, const PointD& y, const WeightedNorm& norm) {
  if (x.size() != norm.dim() || y.size() != norm.dim()) {
    throw std::invalid_argument("point dimension does not match the norm");
  }
  LpLength length;
  length.infinite = norm.infinite;
  length.a = norm.a;
  length.b = norm.b;
  length.components.reserve(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) length.components.push_back(norm.omega[k] * abs_value(x[k] - y[k]));
  return length;
}

Ordering compare(const LpLength& length, const Rational& r) {
  if (r < 0) return Ordering::kGreater;
  Rational exact;
  if (length.exact_value(exact)) return cmp_rational(exact, r);
  if (length.b == 1) return cmp_rational(length.integer_power_sum(), pow(r, length.a));
  if (length.b == 2) {
    // sum_k sqrt(u_k^a) versus sqrt(r^a).
    std::vector<Rational> coefficients(length.components.size() + 1, Rational(1));
    coefficients.back() = -1;
    std::vector<Rational> radicands;
    for (const auto& u : length.components) radicands.push_back(pow(u, length.a));
    radicands.push_back(pow(r, length.a));
    return from_sign(detail::sign_of_sqrt_sum(Rational(0), coefficients, radicands));
  }
  for (unsigned bits = 64; bits <= kMaxRefinementBits; bits *= 2) {
    Rational lo, hi;
    length.bounds(bits, lo, hi);
    if (hi < r) return Ordering::kLess;
    if (lo > r) return Ordering::kGreater;
  }
  throw UndecidedComparison("cannot separate L_p length from " + to_string(r));
}

Ordering compare_offset(const LpLength& length, const Rational& r, int sign_t, const LpLength& t) {
  Rational x_exact, t_exact;
  const bool x_rational = length.exact_value(x_exact);
  const bool t_rational = t.exact_value(t_exact);
  if (t_rational) return compare(length, r + sign_t * t_exact);
  if (x_rational && !t.infinite && t.a == 2 && t.b == 1) {
    // x - r  vs  sign_t * sqrt(T)
    return from_sign(detail::sign_of_sqrt_sum(x_exact - r, {Rational(-sign_t)}, {t.integer_power_sum()}));
  }
  if (!length.infinite && !t.infinite && length.a == 2 && length.b == 1 && t.a == 2 && t.b == 1) {
    return from_sign(detail::sign_of_sqrt_sum(-r, {Rational(1), Rational(-sign_t)},
                                              {length.integer_power_sum(), t.integer_power_sum()}));
  }
  for (unsigned bits = 64; bits <= kMaxRefinementBits; bits *= 2) {
    Rational lo, hi, t_lo, t_hi;
    length.bounds(bits, lo, hi);
    t.bounds(bits, t_lo, t_hi);
    Rational target_lo = sign_t > 0 ? Rational(r + t_lo) : Rational(r - t_hi);
    Rational target_hi = sign_t > 0 ? Rational(r + t_hi) : Rational(r - t_lo);
    if (hi < target_lo) return Ordering::kLess;
    if (lo > target_hi) return Ordering::kGreater;
  }
  throw UndecidedComparison("cannot separate L_p length from offset radius");
}

Ordering lp_distance_cmp(const PointD& x, const PointD& y, const WeightedNorm& norm, const Rational& r) {
  return compare(lp_length(x, y, norm), r);
}

LpLength lp_cell_diameter(const WeightedNorm& norm, const Rational& side) {
  if (side <= 0) throw std::invalid_argument("cell side must be positive");
  LpLength t;
  t.infinite = norm.infinite;
  t.a = norm.a;
  t.b = norm.b;
  for (const auto& w : norm.omega) t.components.push_back(side * w);
  return t;
}

ShellClass lp_shell_classify(const PointD& center, const Rational& r, const PointD& cell_origin,
                             const Rational& side, const WeightedNorm& norm) {
  norm.validate();
  if (center.size() != norm.dim() || cell_origin.size() != norm.dim()) {
    throw std::invalid_argument("point dimension does not match the norm");
  }
  const LpLength t = lp_cell_diameter(norm, side);
  if (compare(t, r) == Ordering::kGreater) {
    throw ShellPreconditionError("radius is smaller than the cell diameter bound");
  }
  PointD nearest(center.size());
  PointD farthest(center.size());
  for (std::size_t k = 0; k < center.size(); ++k) {
    const Rational lo = cell_origin[k];
    const Rational hi = cell_origin[k] + side;
    nearest[k] = center[k] < lo ? lo : (center[k] > hi ? hi : center[k]);
    farthest[k] = (center[k] - lo >= hi - center[k]) ? lo : hi;
  }
  const LpLength d_min = lp_length(nearest, center, norm);
  const LpLength d_max = lp_length(farthest, center, norm);
  if (compare(d_min, r) != Ordering::kLess) return ShellClass::kOutsideOuter;
  if (compare(d_max, r) != Ordering::kGreater) return ShellClass::kInsideInner;
  const bool inside_outer = compare_offset(d_max, r, +1, t) != Ordering::kGreater;
  const bool outside_inner = compare_offset(d_min, r, -1, t) != Ordering::kLess;
  return (inside_outer && outside_inner) ? ShellClass::kWithinShell : ShellClass::kStraddles;
}

}  // namespace circpack
