#ifndef CIRCPACK_LP_NORM_H_
#define CIRCPACK_LP_NORM_H_

#include <stdexcept>
#include <vector>

#include "circpack/rational.h"

namespace circpack {

using PointD = std::vector<Rational>;

// Weighted L_{p,omega} norm  ||x|| = (sum_k (omega_k |x_k|)^p)^(1/p),  p = a/b,
// or max_k omega_k |x_k| when infinite.
struct WeightedNorm {
  bool infinite = false;
  unsigned a = 2;
  unsigned b = 1;
  std::vector<Rational> omega;

  static WeightedNorm finite(unsigned a, unsigned b, std::vector<Rational> omega);
  static WeightedNorm infinity(std::vector<Rational> omega);

  std::size_t dim() const { return omega.size(); }
  // Throws std::invalid_argument unless p >= 1, omega_k >= 1 and d >= 1.
  void validate() const;
};

enum class Ordering { kLess, kEqual, kGreater };

// Thrown when a comparison between irrational quantities cannot be
// separated at the maximum refinement depth (only reachable for b >= 3 or
// for mixed sums with p not in {1, 2, infinity}).
class UndecidedComparison : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value  (sum_k u_k^p)^(1/p)  for non-negative rationals u_k (max u_k when
// p is infinite). Distances and cell diameters are both of this form, so all
// comparisons are carried out on the components without evaluating roots.
struct LpLength {
  bool infinite = false;
  unsigned a = 1;
  unsigned b = 1;
  std::vector<Rational> components;

  // Sum of u_k^a when b == 1 (that is, the p-th power of the length).
  Rational integer_power_sum() const;
  // Exact value when it is rational (p in {1, infinity}, or perfect powers).
  bool exact_value(Rational& value) const;
  // Rational interval containing the value, width shrinking with `bits`.
  void bounds(unsigned bits, Rational& lo, Rational& hi) const;
};

LpLength lp_length(const PointD& x, const PointD& y, const WeightedNorm& norm);

Ordering compare(const LpLength& length, const Rational& r);
// Compares length against  r + sign_t * t  (sign_t is +1 or -1).
Ordering compare_offset(const LpLength& length, const Rational& r, int sign_t, const LpLength& t);

Ordering lp_distance_cmp(const PointD& x, const PointD& y, const WeightedNorm& norm, const Rational& r);

// Upper bound t on the diameter of a cube of side `side` in the norm:
// side * (sum_k omega_k^p)^(1/p), or side * max_k omega_k.
LpLength lp_cell_diameter(const WeightedNorm& norm, const Rational& side);

enum class ShellClass {
  kInsideInner,   // cell lies in the closed sphere
  kWithinShell,   // cell meets the sphere's boundary; inside C_+ and outside C_-
  kOutsideOuter,  // cell does not meet the open sphere
  kStraddles,     // cell meets the boundary but escapes the shell
};

class ShellPreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// `cell_origin` is the lower corner of the cube [o, o + side]^d.
ShellClass lp_shell_classify(const PointD& center, const Rational& r, const PointD& cell_origin,
                             const Rational& side, const WeightedNorm& norm);

namespace detail {

// Sign of  constant + sum_i coefficients[i] * sqrt(radicands[i])  (radicands >= 0),
// decided exactly by repeated conjugation in the multiquadratic field.
int sign_of_sqrt_sum(const Rational& constant, const std::vector<Rational>& coefficients,
                     const std::vector<Rational>& radicands);

}  // namespace detail

}  // namespace circpack

#endif  // CIRCPACK_LP_NORM_H_
