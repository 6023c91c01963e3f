#ifndef CIRCPACK_COVER_IP_H_
#define CIRCPACK_COVER_IP_H_

#include <cstdint>
#include <vector>

#include "circpack/oracle.h"

namespace circpack {

// min sum x_c  subject to  sum_c c_i x_c >= demands_i,  x_c >= 0 integer.
struct CoverIPInstance {
  std::vector<Configuration> configs;
  std::vector<std::int64_t> demands;
};

struct CoverIPOptions {
  std::int64_t node_budget = 5000;
};

struct CoverIPSolution {
  bool feasible = false;
  int uncovered_class = -1;              // set when no configuration covers a demanded class
  std::vector<std::int64_t> multiplicity;  // aligned with CoverIPInstance::configs
  std::int64_t bins = 0;
  Rational lp_bound;                     // root LP optimum
  bool optimal = false;                  // search finished within the node budget
  std::int64_t nodes = 0;
};

// Exact best-first branch and bound; the LP relaxation at each node is
// solved by rational dual simplex. Without the node budget running out
// the returned value is optimal.
CoverIPSolution solve_cover_ip(const CoverIPInstance& ip, const CoverIPOptions& options = {});

// Reference solver: enumerates every x with sum x <= max_total.
CoverIPSolution solve_cover_ip_enumerate(const CoverIPInstance& ip, std::int64_t max_total);

// Covering LP  min sum y  s.t.  D y >= d,  y <= upper (entries < 0 mean no
// bound),  y >= 0. Returns false when infeasible.
bool solve_cover_lp(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& rhs,
                    const std::vector<Rational>& upper, std::vector<Rational>& solution, Rational& value);

}  // namespace circpack

#endif  // CIRCPACK_COVER_IP_H_
