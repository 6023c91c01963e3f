#ifndef CIRCPACK_BRUTE_FORCE_H_
#define CIRCPACK_BRUTE_FORCE_H_

#include <cstdint>

#include "circpack/oracle.h"

namespace circpack {

struct BruteForceResult {
  bool known = false;          // false: the oracle call budget ran out
  std::int64_t bins = 0;       // minimum over partitions into certified parts
  std::int64_t lower = 0;      // same minimum when uncertified parts are admitted too
  std::int64_t oracle_calls = 0;
};

// Minimum bin count over set partitions of at most eight circles. A part is
// admitted when the backend finds an exact packing of it in w x h; supersets
// of parts that are not admitted are not tried.
BruteForceResult brute_force_opt(const Instance& inst, const BackendOptions& backend,
                                 std::int64_t call_budget = 4096);

}  // namespace circpack

#endif  // CIRCPACK_BRUTE_FORCE_H_
